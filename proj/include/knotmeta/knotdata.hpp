#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "knotmeta/apoly.hpp"
#include "knotmeta/intlinalg.hpp"

namespace knotmeta {

/// Malformed input or an input record that violates a model invariant.
/// `record()` is the zero-based index of the offending record, or -1 when
/// the failure is not tied to a record.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, long record = -1)
      : std::runtime_error(record >= 0 ? "record " + std::to_string(record) + ": " + what : what),
        record_(record) {}
  long record() const { return record_; }

 private:
  long record_;
};

/// Knot given by a 2g x 2g Seifert matrix.
class SeifertKnot {
 public:
  /// Validates: square, even dimension, det(V - V^T) = 1.
  /// Throws std::invalid_argument on violation.
  SeifertKnot(std::string name, IntMat v);

  const std::string& name() const { return name_; }
  const IntMat& seifert_matrix() const { return v_; }
  std::size_t genus() const { return v_.rows() / 2; }
  /// W = V + V^T.
  IntMat symmetrized() const { return v_ + v_.transpose(); }

 private:
  std::string name_;
  IntMat v_;
};

/// 2-bridge knot S(p, q): p odd >= 3, q odd, gcd(p, |q|) = 1, p > |q| > 0.
class TwoBridge {
 public:
  /// Throws std::invalid_argument on violation.
  TwoBridge(long p, long q, std::string name = {});

  long p() const { return p_; }
  long q() const { return q_; }
  const std::string& name() const { return name_; }

  static bool valid(long p, long q);

 private:
  long p_, q_;
  std::string name_;
};

using KnotRecord = std::variant<SeifertKnot, TwoBridge>;

const std::string& knot_name(const KnotRecord& k);

struct Letter {
  int gen;  // 1 or 2
  int exp;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  GroupWord inverse() const;
  GroupWord& operator*=(const GroupWord& o);
  friend GroupWord operator*(GroupWord a, const GroupWord& b) { return a *= b; }
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

  /// x_gen^n as a word (n may be negative or zero).
  static GroupWord power(int gen, long n);

  long exponent_sum() const;
  long exponent_sum(int gen) const;

  /// e.g. "x1 x2^-1 x1^-1 x2".
  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

/// |det(V + V^T)| = |Delta_K(-1)|. Throws std::domain_error when it is 0.
Int determinant_of_knot(const SeifertKnot& k);
/// |Delta_{S(p,q)}(-1)| = p.
Int determinant_of_knot(const TwoBridge& k);
Int determinant_of_knot(const KnotRecord& k);

/// e_i = (-1)^floor(i q / p), i = 1..p-1 (floor toward -infinity).
std::vector<int> epsilon_sequence(const TwoBridge& k);

/// w = x1^{e_1} x2^{e_2} x1^{e_3} ... x2^{e_{p-1}}.
GroupWord relator_word(const TwoBridge& k);

/// lambda = w^{-1} * w~ * x1^{2 sigma}, w~ = x1^{-e_1} x2^{-e_2} ...,
/// sigma = sum e_i.
GroupWord longitude_word(const TwoBridge& k);

// --- ingestion ---------------------------------------------------------------

/// A JSON document is either one record object or an array of them.
std::vector<KnotRecord> parse_knots(const std::string& json_text);
std::vector<KnotRecord> load_knots(const std::filesystem::path& path);
std::vector<APoly> parse_apolys(const std::string& json_text);
std::vector<APoly> load_apolys(const std::filesystem::path& path);

/// Inverse of parse_knots / parse_apolys (an array document, 2-space indent).
std::string serialize_knots(const std::vector<KnotRecord>& knots);
std::string serialize_apolys(const std::vector<APoly>& polys);

}  // namespace knotmeta
