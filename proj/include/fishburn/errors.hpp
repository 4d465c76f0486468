#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace fishburn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed canonical text (see text.hpp).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The first entry is nonzero or some entry exceeds 1 + asc(prefix).
/// `index()` is 1-based.
class NotAscentSequence : public Error {
 public:
  explicit NotAscentSequence(std::size_t index)
      : Error("not an ascent sequence: bound violated at index " + std::to_string(index)),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// The sequence is not the image of any ascent sequence under the hat map.
class NotModified : public Error {
 public:
  NotModified() : Error("not a modified ascent sequence") {}
};

class NotPermutation : public Error {
 public:
  explicit NotPermutation(const std::string& what) : Error("not a permutation: " + what) {}
};

/// A relation that is not irreflexive and transitive.
class NotPartialOrder : public Error {
 public:
  explicit NotPartialOrder(const std::string& what) : Error("not a partial order: " + what) {}
};

/// Carries an induced 2+2 as {x, x', y, y'} with x' < x and y' < y.
class NotTwoPlusTwoFree : public Error {
 public:
  explicit NotTwoPlusTwoFree(std::array<int, 4> witness)
      : Error("poset contains an induced 2+2 on elements {" + std::to_string(witness[0]) + "," +
              std::to_string(witness[1]) + "," + std::to_string(witness[2]) + "," +
              std::to_string(witness[3]) + "}"),
        witness_(witness) {}
  const std::array<int, 4>& witness() const noexcept { return witness_; }

 private:
  std::array<int, 4> witness_;
};

class NotInvolution : public Error {
 public:
  explicit NotInvolution(const std::string& what) : Error("not an involution: " + what) {}
};

class HasFixedPoint : public Error {
 public:
  explicit HasFixedPoint(int point)
      : Error("involution has fixed point " + std::to_string(point)), point_(point) {}
  int point() const noexcept { return point_; }

 private:
  int point_;
};

/// The permutation contains (231,{1},{1}): pi_i < pi_{i+1} and pi_k = pi_i - 1
/// for some k > i + 1. Positions are 1-based.
class NotInR : public Error {
 public:
  NotInR(int i, int k)
      : Error("permutation contains (231,{1},{1}) at positions (" + std::to_string(i) + "," +
              std::to_string(i + 1) + "," + std::to_string(k) + ")"),
        i_(i),
        k_(k) {}
  int first() const noexcept { return i_; }
  int last() const noexcept { return k_; }

 private:
  int i_;
  int k_;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t a, std::size_t b)
      : Error("pattern lengths differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// A factorial-time oracle enumeration was asked for a size above its cap.
class BruteForceCapExceeded : public Error {
 public:
  BruteForceCapExceeded(int n, int cap)
      : Error("n = " + std::to_string(n) + " exceeds the brute-force cap " + std::to_string(cap) +
              " (override with FISHBURN_MAX_BRUTE_N)"),
        n_(n),
        cap_(cap) {}
  int n() const noexcept { return n_; }
  int cap() const noexcept { return cap_; }

 private:
  int n_;
  int cap_;
};

}  // namespace fishburn
