#pragma once

#include <cstdint>

#include "argdyn/change.hpp"
#include "argdyn/semantics.hpp"

namespace argdyn {
namespace oracle {

/// Portable deterministic generator (splitmix64). Fixed here so that
/// generated corpora reproduce bit-identically across platforms and
/// implementations.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
  std::uint64_t state_;
};

struct GeneratorConfig {
  std::size_t argument_count = 1;
  double attack_probability = 0.0;
  bool allow_self_attacks = false;
  std::uint64_t seed = 0;
};

/// Literal transcription of the semantics definitions over an explicit
/// enumeration of all argument subsets (ordered by size, then
/// lexicographically). Refuses frameworks above 20 arguments.
ExtensionSet brute_force_extensions(const Framework& f, SemanticsKind k);

/// Arguments a0..a{n-1}; each ordered pair included independently with
/// the configured probability. Identical configs produce identical
/// frameworks.
Framework random_framework(const GeneratorConfig& cfg);

enum class ChangeKind { AddAttack, RemoveAttack, AddArgument, RemoveArgument };

/// Uniformly samples an applicable change of the requested kind; raises
/// a DomainError when the framework admits none (e.g. RemoveAttack on an
/// attack-free framework). AddArgument picks a fresh name and a
/// non-empty interaction set.
Change random_change(const Framework& f, ChangeKind kind, std::uint64_t seed);

}  // namespace oracle
}  // namespace argdyn
