#ifndef QVERIFY_QVERIFY_HPP
#define QVERIFY_QVERIFY_HPP

#include "bigrat.hpp"
#include "laurent.hpp"
#include "ratfunc.hpp"
#include "modular.hpp"
#include "factored.hpp"
#include "field_ops.hpp"
#include "qseries.hpp"
#include "ast.hpp"
#include "eval.hpp"
#include "specs.hpp"
#include "dsl.hpp"
#include "catalog.hpp"
#include "verifier.hpp"
#include "report.hpp"

#endif
