#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlab {

using Idx = int;

enum class ErrorKind {
  NotAPoset,
  NotALattice,
  NoBounds,
  UnknownElement,
  NotJoinPreserving,
  BottomNotPreserved,
  DomainMismatch,
  NotAssociative,
  NotBimorphic,
  BadUnit,
  BadInvolution,
  NoInvolution,
  NotPrime,
  NotSemiIntegral,
  NotSemiUnital,
  HypothesisFailed,
  StructureMissing,
  CarrierTooLarge,
  SizeCapExceeded,
  InconsistentExtension,
  Eq22Violated,
  NotInvolutive,
  NotAHom,
  NotHoms,
  NucleusNotInvolutive,
  PreconditionFailed,
  NotAQuanticFrame,
  NotAFilter,
  NotInjective,
  NotReduced,
  UnknownName,
  ParseError,
  EmptySpectrum,
  InternalError,
};

const char* error_kind_name(ErrorKind k);

// All validation failures carry element-name witnesses in the message.
class qlab_error : public std::runtime_error {
 public:
  qlab_error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw qlab_error(kind, message);
}

// Fixed-width bitset over a dynamic universe, used for bi-ideal members
// and subset bookkeeping.
struct Bitset {
  std::vector<std::uint64_t> w;
  int n = 0;

  Bitset() = default;
  explicit Bitset(int bits) : w((bits + 63) / 64, 0), n(bits) {}

  bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  bool subset_of(const Bitset& o) const {
    for (size_t k = 0; k < w.size(); ++k)
      if (w[k] & ~o.w[k]) return false;
    return true;
  }
  void or_with(const Bitset& o) {
    for (size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
  }
  void and_with(const Bitset& o) {
    for (size_t k = 0; k < w.size(); ++k) w[k] &= o.w[k];
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  bool operator==(const Bitset& o) const { return n == o.n && w == o.w; }
  bool operator<(const Bitset& o) const { return w < o.w; }
};

unsigned long qlab_seed();

}  // namespace qlab
