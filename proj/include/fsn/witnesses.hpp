#pragma once

#include <string>
#include <vector>

#include "fsn/reduce.hpp"
#include "fsn/syntax.hpp"

namespace fsn {

// A minimal program whose only redex is an instance of `rule` at the root.
struct Witness {
  RuleId rule;
  std::string source;
  Program program;
};

// One witness per rule, in RuleId order.
const std::vector<Witness>& witnesses();

}  // namespace fsn
