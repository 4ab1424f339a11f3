#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace talc {

/// f : [n] -> [n] with 0 < f(i) <= i for all i. There are n! of them.
class SubexceedantFunction {
  public:
    SubexceedantFunction() = default;
    explicit SubexceedantFunction(std::vector<int> values);

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const { return values_; }
    int operator()(int i) const { return values_[static_cast<std::size_t>(i) - 1]; }

    /// Indices introducing a new image value: i such that f(i) is not among
    /// f(1..i-1). Its size equals |image(f)| (for each image value the
    /// smallest preimage is a leader). f(1) = 1 forces 1 into every leader
    /// set.
    std::set<int> block_leaders() const;

    /// The image of the leader set, f(bl(f)).
    std::set<int> leader_values() const;

    std::string to_string() const;
    static SubexceedantFunction parse(const std::string& s);

    bool operator==(const SubexceedantFunction&) const = default;

  private:
    std::vector<int> values_;
};

/// Calls fn for every subexceedant function on [n] (odometer order).
void for_each_subexceedant(int n, const std::function<void(const SubexceedantFunction&)>& fn);

}  // namespace talc
