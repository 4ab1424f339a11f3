#include "talc/combinat/lambda_bijection.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace talc {

Permutation lambda_map(const SubexceedantFunction& f) {
    const int n = f.size();
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    std::set<int> image;  // f(1..i-1)
    for (int i = 1; i <= n; ++i) {
        const int v = f(i);
        if (v == i) {
            word.insert(word.begin(), i);
        } else if (image.count(v)) {
            // end of the increasing run starting at the letter v
            auto it = std::find(word.begin(), word.end(), v);
            assert(it != word.end());
            auto run_end = it;
            while (std::next(run_end) != word.end() && *std::next(run_end) > *run_end) ++run_end;
            word.insert(std::next(run_end), i);
        } else {
            auto it = std::find(word.begin(), word.end(), v);
            assert(it != word.end());
            word.insert(it, i);
        }
        image.insert(v);
    }
    return Permutation(std::move(word));
}

SubexceedantFunction lambda_inverse(const Permutation& pi) {
    const int n = pi.size();
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(n));
    std::set<int> image;
    for (int i = 1; i <= n; ++i) {
        // pi restricted to letters <= i, in place
        std::vector<int> restricted;
        for (int v : pi.one_line())
            if (v <= i) restricted.push_back(v);
        const auto pos = static_cast<std::size_t>(
            std::find(restricted.begin(), restricted.end(), i) - restricted.begin());
        int fi;
        if (pos == 0) {
            fi = i;
        } else if (pos + 1 < restricted.size() && !image.count(restricted[pos + 1])) {
            fi = restricted[pos + 1];
        } else {
            fi = 0;
            for (std::size_t j = pos; j-- > 0;) {
                if (image.count(restricted[j])) {
                    fi = restricted[j];
                    break;
                }
            }
            assert(fi != 0);
        }
        values.push_back(fi);
        image.insert(fi);
    }
    return SubexceedantFunction(std::move(values));
}

}  // namespace talc
