#include <compbal/part_set.hpp>

#include <compbal/errors.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace compbal {

PartSet validate_part_set(const std::vector<int>& raw) {
  if (raw.empty()) throw input_error(errc::empty_input, "part set must not be empty");

  PartSet s;
  s.parts = raw;
  std::sort(s.parts.begin(), s.parts.end());

  for (int p : s.parts) {
    if (p < 1)
      throw input_error(errc::non_positive_part,
                        "part " + std::to_string(p) + " is not a positive integer");
  }
  for (std::size_t i = 1; i < s.parts.size(); ++i) {
    if (s.parts[i] == s.parts[i - 1])
      throw input_error(errc::duplicate_part,
                        "duplicate part " + std::to_string(s.parts[i]));
  }

  s.gcd_all = 0;
  for (int p : s.parts) s.gcd_all = std::gcd(s.gcd_all, static_cast<std::int64_t>(p));

  if (s.parts.size() == 1) {
    s.gcd_prefix = s.parts[0];
  } else {
    s.gcd_prefix = 0;
    for (std::size_t i = 0; i + 1 < s.parts.size(); ++i)
      s.gcd_prefix = std::gcd(s.gcd_prefix, static_cast<std::int64_t>(s.parts[i]));
  }

  s.balanced_candidate = s.parts.size() >= 2 && s.gcd_prefix == 1;
  return s;
}

}  // namespace compbal
