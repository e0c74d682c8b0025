#include <compbal/oracle.hpp>

#include <compbal/errors.hpp>

#include <string>
#include <vector>

namespace compbal {

CompositionPoly brute_force_polynomial(const PartSet& s, std::int64_t n,
                                       std::uint64_t max_compositions) {
  if (n < 0) throw input_error(errc::non_positive_part, "n must be >= 0");

  const int m = s.largest();
  CompositionPoly result;
  result.n = n;
  result.coeffs.assign(static_cast<std::size_t>(n / m) + 1, BigInt(0));

  // Depth-first walk over part sequences, explicit stack so that long
  // single-part compositions cannot overflow the call stack.
  struct Frame {
    std::int64_t remaining;
    int m_count;
    std::size_t next_part;
  };
  std::vector<Frame> stack;
  stack.push_back({n, 0, 0});
  std::uint64_t found = 0;

  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.remaining == 0) {
      if (++found > max_compositions)
        throw resource_error(errc::too_large,
                             "more than " + std::to_string(max_compositions) +
                                 " compositions; enumeration refused");
      result.coeffs[static_cast<std::size_t>(top.m_count)] += 1;
      stack.pop_back();
      continue;
    }
    if (top.next_part == s.parts.size()) {
      stack.pop_back();
      continue;
    }
    const int part = s.parts[top.next_part++];
    if (part <= top.remaining)
      stack.push_back({top.remaining - part, top.m_count + (part == m ? 1 : 0), 0});
  }

  result.normalize();
  return result;
}

}  // namespace compbal
