#include "theta_monad/chow.hpp"

namespace theta_monad::chow {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Exists: return "EXISTS";
    case Verdict::BoundarySemihomogeneous: return "BOUNDARY_SEMIHOMOGENEOUS";
    case Verdict::UnknownHalf: return "UNKNOWN_HALF";
    case Verdict::OutsideBogomolov: return "OUTSIDE_BOGOMOLOV";
  }
  return "?";
}

std::int64_t chi_rank2(ChernPair c) {
  if (c.m % 2 != 0 && c.n % 2 != 0)
    throw NonIntegralChi("chi is not an integer for m = " + std::to_string(c.m) +
                         ", n = " + std::to_string(c.n) + " (both odd)");
  return c.m * c.m * c.m - 3 * c.n * c.m / 2;
}

Verdict existence_gate(ChernPair c) {
  const std::int64_t lhs = c.m * c.m;
  const std::int64_t rhs = 2 * c.n;
  if (lhs > rhs) return Verdict::OutsideBogomolov;
  if (lhs == rhs) return Verdict::BoundarySemihomogeneous;
  if (c.n % 2 == 0 && (c.m * c.n) % 4 == 0) return Verdict::Exists;
  return Verdict::UnknownHalf;
}

std::int64_t discriminant_dot_theta(ChernPair c) { return (2 * c.n - c.m * c.m) * kThetaCubed; }

std::int64_t ext1_dim_formula(ChernPair c) { return discriminant_dot_theta(c) / 3 + 5; }

ChernPair twist(ChernPair c, std::int64_t k) {
  return {c.m + 2 * k, c.n + 2 * c.m * k + 2 * k * k};
}

ChernCharacter ChernCharacter::of_line_bundle(std::int64_t m) {
  const exactla::Rational q(m);
  return {1, q, q * q / 2, q * q * q / 6};
}

ChernCharacter ChernCharacter::operator+(const ChernCharacter& o) const {
  return {rank + o.rank, ch1 + o.ch1, ch2 + o.ch2, ch3 + o.ch3};
}

ChernCharacter ChernCharacter::operator-(const ChernCharacter& o) const {
  return {rank - o.rank, ch1 - o.ch1, ch2 - o.ch2, ch3 - o.ch3};
}

ChernPair ChernCharacter::to_rank2_pair() const {
  if (rank != 2) throw std::domain_error("Chern character does not have rank 2");
  // ch1 = c1, ch2 = (c1^2 - 2 c2)/2, so in units of Theta^2/2: n = m^2 - 2 ch2.
  const exactla::Rational n = ch1 * ch1 - 2 * ch2;
  if (ch1.get_den() != 1 || n.get_den() != 1)
    throw std::domain_error("Chern classes are not integral");
  return {ch1.get_num().get_si(), n.get_num().get_si()};
}

}  // namespace theta_monad::chow
