#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "ctgeo/chart.hpp"

namespace ctgeo::detail {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class Op : unsigned char {
  constant,
  coordinate,
  add,
  sub,
  mul,
  div,
  pow,
  neg,
  call,
};

enum class Func : unsigned char { sin, cos, tan, exp, log, sqrt };

struct Expr {
  Op op;
  Func func = Func::sin;
  double value = 0.0;  // constant
  int coord = -1;      // coordinate index
  ExprPtr a = nullptr;
  ExprPtr b = nullptr;
};

const char* func_name(Func f);

// Smart constructors; fold constants and drop zero/one units. Folding is
// best-effort only, nothing downstream relies on it.
ExprPtr make_constant(double v);
ExprPtr make_coordinate(int index);
ExprPtr make_add(ExprPtr a, ExprPtr b);
ExprPtr make_sub(ExprPtr a, ExprPtr b);
ExprPtr make_mul(ExprPtr a, ExprPtr b);
ExprPtr make_div(ExprPtr a, ExprPtr b);
ExprPtr make_pow(ExprPtr a, ExprPtr b);
ExprPtr make_neg(ExprPtr a);
ExprPtr make_call(Func f, ExprPtr a);

bool is_zero(const ExprPtr& e);
bool is_one(const ExprPtr& e);

/// Exact symbolic derivative; results are cached per (node, coordinate).
ExprPtr differentiate(const ExprPtr& e, int coord);

/// Evaluate at coordinate values; shared subtrees are evaluated once.
/// Throws DomainError on domain violations or non-finite intermediates.
double evaluate(const ExprPtr& e, std::span<const double> coords);

std::string print(const ExprPtr& e, const Chart& chart);

/// Recursive-descent parser over the chart's coordinate identifiers.
ExprPtr parse(std::string_view src, const Chart& chart);

/// Replace coordinate a by coordinate_map[a].
ExprPtr substitute(const ExprPtr& e, std::span<const ExprPtr> coordinate_map);

}  // namespace ctgeo::detail
