// Small tour of the library: q-series values, one catalog check, and a
// user-defined identity.

#include <iostream>

#include "qverify/qverify.hpp"

int main()
{
    using namespace qverify;

    // (a;q)_3 and the q-Catalan number C_3(q)
    std::cout << pochhammer(Monomial::variable(Variable::a), 1, 3).to_string() << "\n";
    std::cout << q_catalan(3, false).to_string() << "\n";

    const Spec& a1 = lookup("A1");
    auto [lhs, rhs] = instantiate(a1, 1);
    std::cout << "A1 at n=1: " << lhs.to_string() << " == " << rhs.to_string() << "\n";

    VerifyResult r = verify_symbolic(a1, 4);
    std::cout << "A1 n=4 symbolic: " << status_name(r.status) << "\n";
    r = verify_modular(a1, 100);
    std::cout << "A1 n=100 modular: " << status_name(r.status) << "\n";

    // a user identity: finite geometric series
    Catalog mine = parse_catalog("id GEO : sum(k, 0, n; q^k) == (1 - q^(n+1))/(1 - q);");
    std::cout << "GEO n=5: " << status_name(verify_symbolic(mine.at("GEO"), 5, mine).status) << "\n";
}
