#include "sl2lab/free_walks.hpp"

#include <cmath>
#include <stdexcept>

#include "sl2lab/parallel.hpp"
#include "sl2lab/rng.hpp"

namespace sl2lab {

FreeWord::FreeWord(std::vector<uint8_t> letters) {
  letters_.reserve(letters.size());
  for (const uint8_t l : letters) append(l);
}

FreeWord FreeWord::from_string(const std::string& s) {
  std::vector<uint8_t> letters;
  for (const char c : s) {
    switch (c) {
      case 'x': letters.push_back(0); break;
      case 'X': letters.push_back(1); break;
      case 'y': letters.push_back(2); break;
      case 'Y': letters.push_back(3); break;
      default: throw std::invalid_argument("free word letters are x, X, y, Y");
    }
  }
  return FreeWord(std::move(letters));
}

void FreeWord::append(uint8_t letter) {
  if (letter > 3) throw std::invalid_argument("letter out of range");
  if (!letters_.empty() && letters_.back() == (letter ^ 1)) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    r.letters_.push_back(*it ^ 1);  // already reduced if *this is
  }
  return r;
}

FreeWord FreeWord::operator*(const FreeWord& other) const {
  FreeWord r = *this;
  for (const uint8_t l : other.letters_) r.append(l);
  return r;
}

FreeWord FreeWord::commutator(const FreeWord& u, const FreeWord& v) {
  return u * v * u.inverse() * v.inverse();
}

BigRational RadialDistribution::q(uint32_t d) const {
  if (d >= counts.size()) return BigRational(0);
  return BigRational(counts[d], denominator());
}

double RadialDistribution::q_double(uint32_t d) const {
  return q(d).convert_to<double>();
}

BigInt RadialDistribution::denominator() const {
  BigInt one(1);
  return one << (2 * n);  // 4^n
}

RadialDistribution radial_distribution(uint32_t n) {
  std::vector<BigInt> cur(n + 1, BigInt(0)), next(n + 1, BigInt(0));
  cur[0] = 1;
  for (uint32_t step = 0; step < n; ++step) {
    for (auto& v : next) v = 0;
    for (uint32_t d = 0; d <= step; ++d) {
      if (cur[d] == 0) continue;
      if (d == 0) {
        next[1] += cur[0] * 4;
      } else {
        next[d + 1] += cur[d] * 3;
        next[d - 1] += cur[d];
      }
    }
    cur.swap(next);
  }
  return RadialDistribution{n, std::move(cur)};
}

BigRational point_probability_at_distance(const RadialDistribution& dist, uint32_t d) {
  if (d > dist.n) return BigRational(0);
  if (d == 0) return dist.q(0);
  // 4 * 3^(d-1) reduced words of length d, all equally likely by isotropy.
  BigInt words(4);
  for (uint32_t i = 1; i < d; ++i) words *= 3;
  return dist.q(d) / BigRational(words);
}

BigRational point_probability(uint32_t n, const FreeWord& w) {
  if (w.length() > n) return BigRational(0);
  return point_probability_at_distance(radial_distribution(n), (uint32_t)w.length());
}

BoundValues bounds(uint32_t n) {
  if (n < 1) throw std::invalid_argument("bounds requires n >= 1");
  BoundValues b;
  b.n = n;
  const double rho = std::pow(std::sqrt(3.0) / 2.0, (double)n);
  b.kesten = rho;
  b.commutator_bound = (2.0 * n + 2.0) * rho;
  const double count = (8.0 * n + 1.0) * (4.0 * n + 1.0) + (2.0 * n + 3.0);
  b.double_commutator_bound = count * rho;
  if (b.double_commutator_bound < 1.0) {
    b.effective_kappa = -std::log(b.double_commutator_bound) / (double)n;
  }
  return b;
}

std::string to_string(WalkEvent e) {
  switch (e) {
    case WalkEvent::Return: return "return";
    case WalkEvent::Commutator: return "commutator";
    case WalkEvent::DoubleCommutator: return "double_commutator";
  }
  return "unknown";
}

namespace {

// One n-step walk as a reduced word; letters drawn uniformly.
FreeWord random_walk(uint32_t n, SplitMix64& rng) {
  FreeWord w;
  for (uint32_t i = 0; i < n; ++i) w.append((uint8_t)(rng.next() >> 62));
  return w;
}

struct EventCounts {
  uint64_t ret = 0, comm = 0, dcomm = 0;
};

EventCounts simulate_batch(uint32_t n, uint64_t from, uint64_t to, uint64_t seed) {
  EventCounts c;
  for (uint64_t s = from; s < to; ++s) {
    SplitMix64 rng(derive_seed(seed, 0x77a1c5ull, s));
    const FreeWord w1 = random_walk(n, rng);
    const FreeWord w2 = random_walk(n, rng);
    const FreeWord w3 = random_walk(n, rng);
    const FreeWord w4 = random_walk(n, rng);
    if (w1.is_identity()) ++c.ret;
    const FreeWord c12 = FreeWord::commutator(w1, w2);
    if (c12.is_identity()) ++c.comm;
    const FreeWord c34 = FreeWord::commutator(w3, w4);
    if (FreeWord::commutator(c12, c34).is_identity()) ++c.dcomm;
  }
  return c;
}

constexpr double kZ95 = 1.959963984540054;

}  // namespace

std::vector<WalkEstimate> simulate_events(uint32_t n, uint64_t samples, uint64_t seed,
                                          unsigned workers) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const uint64_t chunk = 4096;
  const uint64_t n_chunks = (samples + chunk - 1) / chunk;
  std::vector<EventCounts> partial(n_chunks);
  parallel_for(n_chunks, workers, [&](uint64_t i) {
    partial[i] = simulate_batch(n, i * chunk, std::min(samples, (i + 1) * chunk), seed);
  });
  EventCounts total;
  for (const auto& c : partial) {
    total.ret += c.ret;
    total.comm += c.comm;
    total.dcomm += c.dcomm;
  }
  const auto make = [&](WalkEvent e, uint64_t hits) {
    WalkEstimate est;
    est.n = n;
    est.event = e;
    est.samples = samples;
    est.successes = hits;
    est.estimate = (double)hits / (double)samples;
    est.upper_confidence_95 = wilson_upper(hits, samples, kZ95);
    est.seed = seed;
    return est;
  };
  return {make(WalkEvent::Return, total.ret), make(WalkEvent::Commutator, total.comm),
          make(WalkEvent::DoubleCommutator, total.dcomm)};
}

AssignmentCountRecord assignment_counts(uint32_t n, uint32_t K, uint64_t samples, uint64_t seed,
                                        unsigned workers) {
  if (n < 1 || K < 1) throw std::invalid_argument("assignment_counts requires n, K >= 1");
  AssignmentCountRecord rec;
  rec.n = n;
  rec.K = K;
  rec.c_n = BigInt(1) << (uint32_t)(8ull * K * n);  // 4^(4Kn)
  rec.samples = samples;
  rec.seed = seed;
  const auto estimates = simulate_events(n, samples, seed, workers);
  rec.q_hat = estimates[2].estimate;
  rec.d_fraction = std::pow(1.0 - rec.q_hat, (double)K);
  const double complement = 1.0 - rec.d_fraction;
  if (complement > 0.0) {
    const double log_c_n = 8.0 * (double)K * (double)n * std::log(2.0);
    rec.alpha_empirical = -std::log(complement) / log_c_n;
  }
  return rec;
}

}  // namespace sl2lab
