#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sl2lab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A reduced word in the free group F2 over letters x, x^-1, y, y^-1
/// (encoded 0,1,2,3 with inverse = letter ^ 1).
class FreeWord {
public:
  FreeWord() = default;
  explicit FreeWord(std::vector<uint8_t> letters);  // reduces on construction
  static FreeWord from_string(const std::string& s);  // e.g. "xyX" (X = x^-1)

  const std::vector<uint8_t>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  void append(uint8_t letter);  // with last-in-first-out cancellation
  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& other) const;

  static FreeWord commutator(const FreeWord& u, const FreeWord& v);

private:
  std::vector<uint8_t> letters_;
};

/// Exact distribution of the distance from the origin after n steps of the
/// simple random walk on F2, via the birth-death chain (0 -> 1 with
/// probability 1; d -> d+1 with 3/4 and d -> d-1 with 1/4 for d >= 1).
/// Probabilities are counts over 4^n, exact at every n.
struct RadialDistribution {
  uint32_t n = 0;
  std::vector<BigInt> counts;  // counts[d] * 4^-n = P(distance = d)

  BigRational q(uint32_t d) const;
  double q_double(uint32_t d) const;
  BigInt denominator() const;  // 4^n
};

RadialDistribution radial_distribution(uint32_t n);

/// P(walk at w after n steps) = q[|w|] / (4 * 3^(|w|-1)) for |w| >= 1 (all
/// reduced words of one length are equiprobable), q[0] for the identity,
/// and 0 when |w| > n.
BigRational point_probability(uint32_t n, const FreeWord& w);
BigRational point_probability_at_distance(const RadialDistribution& dist, uint32_t d);

/// The walk-bound package at step n.
struct BoundValues {
  uint32_t n = 0;
  double kesten = 0.0;             // (sqrt(3)/2)^n
  double commutator_bound = 0.0;   // (2n+2) (sqrt(3)/2)^n
  double double_commutator_bound = 0.0;  // [(8n+1)(4n+1)+(2n+3)] (sqrt(3)/2)^n
  std::optional<double> effective_kappa;  // -ln(double bound)/n when bound < 1
};

BoundValues bounds(uint32_t n);

enum class WalkEvent { Return, Commutator, DoubleCommutator };

std::string to_string(WalkEvent e);

struct WalkEstimate {
  uint32_t n = 0;
  WalkEvent event = WalkEvent::Return;
  uint64_t samples = 0;
  uint64_t successes = 0;
  double estimate = 0.0;
  double upper_confidence_95 = 0.0;
  uint64_t seed = 0;
};

/// One batch of `samples` draws of four independent n-step walks (uniform
/// letter sequences, reduced on the fly); the three events are tested
/// exactly in F2 on the same batch.
std::vector<WalkEstimate> simulate_events(uint32_t n, uint64_t samples, uint64_t seed,
                                          unsigned workers = 1);

struct AssignmentCountRecord {
  uint32_t n = 0;
  uint32_t K = 0;
  BigInt c_n;                  // 4^(4Kn), exact
  double q_hat = 0.0;          // estimated double-commutator vanishing probability
  double d_fraction = 0.0;     // (1 - q_hat)^K
  std::optional<double> alpha_empirical;
  uint64_t samples = 0;
  uint64_t seed = 0;
};

AssignmentCountRecord assignment_counts(uint32_t n, uint32_t K, uint64_t samples, uint64_t seed,
                                        unsigned workers = 1);

}  // namespace sl2lab
