#include "mckay/builders.hpp"

#include <algorithm>
#include <map>

namespace mckay {
namespace {

using Parts = std::vector<unsigned>;
using Memo = std::map<std::pair<Parts, Parts>, long>;

// chi^lambda on cycle type rest[from..], removing one rim hook per cycle.
long mn_recursive(const Parts& lambda, const Parts& rest, std::size_t from, Memo& memo) {
  if (from == rest.size()) return lambda.empty() ? 1 : 0;
  Parts key_rest(rest.begin() + static_cast<long>(from), rest.end());
  auto key = std::make_pair(lambda, std::move(key_rest));
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const unsigned r = rest[from];
  const std::size_t len = lambda.size();
  // Beta set: beta_i = lambda_i + (len - 1 - i), strictly decreasing.
  std::vector<long> beta(len);
  for (std::size_t i = 0; i < len; ++i) beta[i] = static_cast<long>(lambda[i] + (len - 1 - i));

  long total = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const long target = beta[i] - static_cast<long>(r);
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    long height = 0;
    for (long b : beta)
      if (b > target && b < beta[i]) ++height;
    std::vector<long> next = beta;
    next[i] = target;
    std::sort(next.rbegin(), next.rend());
    Parts mu;
    for (std::size_t j = 0; j < len; ++j) {
      const long part = next[j] - static_cast<long>(len - 1 - j);
      if (part > 0) mu.push_back(static_cast<unsigned>(part));
    }
    const long value = mn_recursive(mu, rest, from + 1, memo);
    total += (height % 2 == 0) ? value : -value;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer mn_value(const Partition& lambda, const CycleType& ct) {
  if (lambda.size() != ct.size())
    throw DomainError("mn_value: |lambda| = " + std::to_string(lambda.size()) + " but cycle type sums to " +
                      std::to_string(ct.size()));
  thread_local Memo memo;
  return Integer(mn_recursive(lambda.parts(), ct.parts(), 0, memo));
}

}  // namespace mckay
