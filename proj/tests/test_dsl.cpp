#include <gtest/gtest.h>

#include "support.hpp"

using namespace qtest;

namespace {

template <class E>
E expect_error(std::string_view text)
{
    try {
        parse_catalog(text);
    } catch (const E& e) {
        return e;
    } catch (const std::exception& e) {
        ADD_FAILURE() << "wrong error type: " << e.what();
        throw;
    }
    ADD_FAILURE() << "no error for: " << text;
    throw std::logic_error("unreachable");
}

} // namespace

TEST(Dsl, OneIdentity)
{
    Catalog c = parse_catalog(
        "id A1x for n>=0 : phi([q^(-2*n), a, b, q^(1-2*n)/(a*b)]; [q^(2-2*n)/a, q^(2-2*n)/b, a*b*q]; 2; q^2) "
        "== q^-n*poch(a;1;n)*poch(b;1;n)*poch(-q;1;n)*poch(a*b;2;n)"
        "/(poch(a;2;n)*poch(b;2;n)*poch(a*b;1;n)) ;");
    ASSERT_EQ(c.size(), 1u);
    const Spec& s = c.specs[0];
    EXPECT_EQ(s.id, "A1x");
    EXPECT_EQ(s.kind, SpecKind::identity);
    EXPECT_EQ(s.n_min, 0);
    for (int n = 0; n <= 4; ++n) {
        auto [l, r] = instantiate(s, n);
        EXPECT_TRUE(rf_equal(l, r)) << "n=" << n;
    }
}

TEST(Dsl, KindsAndDefaults)
{
    Catalog c = parse_catalog(R"(
        # geometric sums
        let G = sum(j, 0, n; q^j);
        id GEO : G == (1 - q^(n+1))/(1 - q);
        id INT for n >= 1 : 2^n - 1 == sum(j, 0, n-1; 2^j);
        family SPLIT : poch(a; 1; n) == poch(a; 1; k)*poch(a*q^k; 1; n-k);
        cert C : f = q^k, H = q^k/(1 - q), target = 1;
    )");
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(c.at("GEO").kind, SpecKind::identity);
    EXPECT_EQ(c.at("GEO").n_min, 0);
    EXPECT_EQ(c.at("INT").kind, SpecKind::integer);
    EXPECT_EQ(c.at("INT").n_min, 1);
    EXPECT_EQ(c.at("SPLIT").kind, SpecKind::family);
    EXPECT_EQ(c.at("C").kind, SpecKind::certificate);
    EXPECT_FALSE(c.at("C").boundary);
}

TEST(Dsl, RelationNeedsShape)
{
    auto e = expect_error<SyntaxError>("rel R : q - a == b;");
    EXPECT_EQ(e.line(), 1u);
}

TEST(Dsl, EmptyPochhammerField)
{
    auto e = expect_error<SyntaxError>("id X : poch(a;;n) == 1;");
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 15u);
    EXPECT_NE(std::string(e.what()).find("1:15: SyntaxError"), std::string::npos);
}

TEST(Dsl, NonAffineExponent)
{
    auto e = expect_error<NonAffineExponent>("id X :\n  q^(n*n) == 1;");
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 7u);
    expect_error<NonAffineExponent>("family X : poch(a; 1; k*n) == 1;");
}

TEST(Dsl, UnknownSymbols)
{
    expect_error<UnknownSymbol>("id X : q^k == 1;");
    auto e = expect_error<UnknownSymbol>("id X : c == 1;");
    EXPECT_EQ(e.column(), 8u);
    expect_error<UnknownSymbol>("id X : q^m == 1;");
    expect_error<UnknownSymbol>("id X : n == 1;");
    expect_error<UnknownSymbol>("ind I : NOPE by NADA;");
}

TEST(Dsl, OtherErrors)
{
    expect_error<SyntaxError>("id X : 1 == 1");
    expect_error<SyntaxError>("id X : 1 == 1; id X : 2 == 2;");
    expect_error<SyntaxError>("id X : 1 == 1 $");
    expect_error<SyntaxError>("id X : poch(a; 0; n) == 1;");
    expect_error<SyntaxError>("id X : poch(1 - a; 1; n) == 1;");
    expect_error<SyntaxError>("id X for n >= -1 : 1 == 1;");
    expect_error<SyntaxError>("lemma X : 1 == 1;");
    auto e = expect_error<SyntaxError>("id X : 1 ==\n\n   ;");
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 4u);
}

TEST(Dsl, PhiLengthInferred)
{
    Catalog c = parse_catalog("id X : phi([q^(-n), a]; [b]; 1; q) == phi([q^(-n), a]; [b]; 1; q; n);");
    EXPECT_TRUE(equal(c.specs[0].lhs, c.specs[0].rhs));
    expect_error<SyntaxError>("id X : phi([a]; [b]; 1; q) == 1;");
}

TEST(Dsl, PrinterRoundTrip)
{
    const char* exprs[] = {
        "q^(-2*n)",
        "(1/2)*a - b",
        "-(a - b)",
        "(a + b)^3",
        "q^(n+1)/(a*b)",
        "poch(-q; 1; n - k)",
        "phi([q^(-2*n), a]; [b*q]; 2; q^2; n)",
        "term([q^(-2*n), a]; [b*q]; 2; q^2; k - 1)",
        "qcat(2*n - 2*k + 1, negq)*cat(k)",
        "sum(j, 0, n; q^j*at(poch(a; 1; j); a = a*q^2))",
        "at(poch(a; 1; n); n = n - 2, k = k + 1, q = q^-1)",
        "1 - (-3)*a",
    };
    for (const char* src : exprs) {
        Catalog c = parse_catalog(std::string("family X : ") + src + " == 1;");
        std::string printed = to_dsl(c.specs[0].lhs);
        Catalog again = parse_catalog("family X : " + printed + " == 1;");
        EXPECT_TRUE(equal(c.specs[0].lhs, again.specs[0].lhs)) << src << " -> " << printed;
    }
}

TEST(Dsl, BuiltinRoundTrip)
{
    const Catalog& cat = builtin_catalog();
    std::string text = serialize(cat);
    Catalog again = parse_catalog(text);
    EXPECT_TRUE(same_structure(cat, again));
    EXPECT_EQ(serialize(again), text);
}

TEST(Dsl, SerializeSingleSpec)
{
    Catalog c = parse_catalog("family S for n >= 2 : poch(a; 2; k) == poch(a; 2; k);");
    EXPECT_EQ(serialize(c.specs[0]), "family S for n >= 2 : poch(a; 2; k) == poch(a; 2; k) ;");
}

TEST(Dsl, ReferencesBaseCatalog)
{
    Catalog c = parse_catalog("tr T : A1 -> V1 with q = q^-1, a = a^-1, b = b^-1;", &builtin_catalog());
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.specs[0].from_id, "A1");
    EXPECT_EQ(c.specs[0].map[Variable::q], mono(1, -1));
    expect_error<UnknownSymbol>("tr T : A1 -> V1 with q = q^-1;");
}
