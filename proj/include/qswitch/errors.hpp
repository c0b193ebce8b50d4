#pragma once

#include <stdexcept>
#include <string>

namespace qswitch {

// A post-selected branch whose probability is below tol::kEmptyBranch.
class EmptyBranchError : public std::runtime_error {
 public:
  EmptyBranchError(const std::string& what, double probability)
      : std::runtime_error(what), probability_(probability) {}
  double probability() const noexcept { return probability_; }

 private:
  double probability_;
};

// P(-) vanishes over the whole time grid of a maximization.
class DegeneratePointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qswitch
