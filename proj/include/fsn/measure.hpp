#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "fsn/reduce.hpp"

namespace fsn {

using MeasureValue = boost::multiprecision::cpp_int;

// χ(M): a polynomial norm that strictly decreases along every commutative
// step. Type annotations are ignored.
MeasureValue chi(const Term& m);

class NotCommutative : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Decrease {
  MeasureValue before;
  MeasureValue after;
  bool strictlyDecreased;
};

// χ before and after contracting the commutative redex `s`.
Decrease checkDecrease(const Context& ctx, const Term& m, const ReductionStep& s);
Decrease checkDecrease(const Term& m, const ReductionStep& s);

}  // namespace fsn
