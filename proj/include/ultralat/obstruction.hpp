#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ultralat/gf.hpp"
#include "ultralat/linalg.hpp"

namespace ultralat {

/// h1 = diag(1, lambda, ..., lambda) and h2 = diag(1, mu, ..., mu) in SL_q(q) with
/// lambda = z^a, mu = z^b for the primitive element z, where ab = q - 1 and gcd(a, b) = 1.
struct ExampleInstance {
  std::uint32_t q = 0, a = 0, b = 0;
  FieldPtr field;
  Elem zeta, lambda, mu;
  Matrix h1, h2;
};

ExampleInstance build_example(std::uint32_t q, std::uint32_t a, std::uint32_t b);

struct CertificateRow {
  std::size_t k = 0;
  std::size_t max_certificate = 0;
  std::map<std::size_t, std::size_t> histogram;  // certificate value -> count
  bool pass = false;
};

struct ObstructionSide {
  std::vector<CertificateRow> rows;  // words in conjugates of the first element
  std::size_t other_certificate = 0;  // min shift rank of the other element
  bool pass = false;
};

struct ObstructionReport {
  std::uint32_t q = 0, a = 0, b = 0;
  std::size_t k_max = 0, samples = 0;
  std::uint64_t seed = 0;
  ObstructionSide forward;  // words in h1^{+-1}, shifts in <lambda>, certificate of h2
  ObstructionSide reverse;  // words in h2^{+-1}, shifts in <mu>, certificate of h1
  bool pass = false;
};

/// Samples words of length k <= k_max in random conjugates of h^{+-1} and checks that some
/// power of the eigenvalue shifts each word to rank at most k, while the other element
/// needs rank q - 1 against every shift. Requires 1 <= k_max <= q - 2 and samples >= 1.
ObstructionReport verify_obstruction(const ExampleInstance& inst, std::size_t k_max, std::size_t samples,
                                     std::uint64_t seed);

/// One random word of the given length, drawn from the substream (seed, k, sample).
Matrix sample_word(const ExampleInstance& inst, bool use_h2, std::size_t k, std::uint64_t seed,
                   std::uint64_t sample);

}  // namespace ultralat
