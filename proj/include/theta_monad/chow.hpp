#pragma once

// Numerical Chow ring of a principally polarized abelian threefold with
// Picard number one. Divisors are multiples of Theta, curves multiples of
// Theta^2/2, points multiples of Theta^3/6, and Theta^3 = 6.

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "theta_monad/exactla.hpp"

namespace theta_monad::chow {

inline constexpr std::int64_t kThetaCubed = 6;

// c1 = m*Theta, c2 = n*Theta^2/2.
struct ChernPair {
  std::int64_t m = 0;
  std::int64_t n = 0;
  bool operator==(const ChernPair&) const = default;
};

enum class Verdict { Exists, BoundarySemihomogeneous, UnknownHalf, OutsideBogomolov };

std::string_view to_string(Verdict v);

class NonIntegralChi : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// chi(E) = m^3 - (3/2) n m. Throws NonIntegralChi when m and n are both odd.
std::int64_t chi_rank2(ChernPair c);

// Which part of the (m, n) plane the pair falls into. The strict-Bogomolov
// pairs that fail the divisibility condition are reported as UnknownHalf:
// neither existence nor non-existence is asserted for them.
Verdict existence_gate(ChernPair c);

// Delta . Theta = (4 c2 - c1^2) . Theta = 6 (2n - m^2).
std::int64_t discriminant_dot_theta(ChernPair c);

// (1/3) Delta . Theta + 5.
std::int64_t ext1_dim_formula(ChernPair c);

// Chern pair of E(k Theta).
ChernPair twist(ChernPair c, std::int64_t k);

// Numerical Chern character r + a*Theta + b*Theta^2 + c*Theta^3.
struct ChernCharacter {
  exactla::Rational rank;
  exactla::Rational ch1;
  exactla::Rational ch2;
  exactla::Rational ch3;

  // ch(P_x(m Theta)) = exp(m Theta); P_x is numerically trivial.
  static ChernCharacter of_line_bundle(std::int64_t m);

  ChernCharacter operator+(const ChernCharacter& o) const;
  ChernCharacter operator-(const ChernCharacter& o) const;
  bool operator==(const ChernCharacter&) const = default;

  // Euler characteristic: the Todd class of an abelian variety is 1.
  exactla::Rational euler_characteristic() const { return ch3 * kThetaCubed; }

  // Requires rank 2; throws std::domain_error otherwise or when the classes
  // are not integral multiples of Theta and Theta^2/2.
  ChernPair to_rank2_pair() const;
};

}  // namespace theta_monad::chow
