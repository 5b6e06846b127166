#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quditmap {

/// Thrown when a bit pattern is not a codeword of the scheme it is decoded
/// against.
class InvalidCodeword : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/**
 * @brief Fixed-width bit pattern. Bit i lives on qubit i.
 *
 * Widths up to 64 are supported, which covers unary registers for d <= 64.
 * to_string() prints the most significant bit first, so the rightmost
 * character is qubit 0.
 */
class BitString {
public:
  static constexpr std::size_t kMaxWidth = 64;

  BitString() = default;
  BitString(std::size_t width, std::uint64_t bits);

  /// Parses an MSB-first string of '0'/'1'; spaces are ignored.
  static BitString parse(std::string_view text);

  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] std::uint64_t bits() const { return bits_; }
  [[nodiscard]] bool test(std::size_t i) const;
  [[nodiscard]] std::size_t popcount() const;
  [[nodiscard]] std::string to_string() const;

  /// Groups of `group` bits separated by spaces, as in block-unary tables.
  [[nodiscard]] std::string to_string_grouped(std::size_t group) const;

  friend bool operator==(const BitString&, const BitString&) = default;

private:
  std::size_t width_ = 0;
  std::uint64_t bits_ = 0;
};

enum class EncodingKind { Unary, StdBinary, Gray, BlockUnary };

std::string_view to_string(EncodingKind kind);

/**
 * @brief Integer-to-qubit code for a d-level particle.
 *
 * Block unary splits the levels into ceil(d/g) blocks of g levels; block b
 * occupies qubits [b*B, (b+1)*B) with B = ceil(log2(g+1)), and an occupied
 * block holds the compact sub-encoding of (l mod g) + 1 so it is never zero.
 */
class EncodingScheme {
public:
  static EncodingScheme unary(std::size_t d);
  static EncodingScheme std_binary(std::size_t d);
  static EncodingScheme gray(std::size_t d);
  static EncodingScheme block_unary(std::size_t d, std::size_t g,
                                    EncodingKind sub_kind = EncodingKind::StdBinary);

  /// Parses CLI tokens: unary, sb, gray, bu<g>, bu<g>-sb, bu<g>-gray.
  static EncodingScheme from_token(std::string_view token, std::size_t d);

  [[nodiscard]] EncodingKind kind() const { return kind_; }
  [[nodiscard]] std::size_t levels() const { return d_; }
  [[nodiscard]] std::size_t block_size() const { return g_; }
  [[nodiscard]] EncodingKind sub_kind() const { return sub_kind_; }
  [[nodiscard]] bool is_compact() const {
    return kind_ == EncodingKind::StdBinary || kind_ == EncodingKind::Gray;
  }

  [[nodiscard]] std::size_t qubit_count() const;
  /// Qubits per block; 0 unless block unary.
  [[nodiscard]] std::size_t block_width() const;
  [[nodiscard]] std::size_t block_count() const;

  [[nodiscard]] BitString encode(std::size_t level) const;
  [[nodiscard]] std::size_t decode(const BitString& codeword) const;

  /// Qubits that must be inspected to identify `level` (sorted ascending).
  [[nodiscard]] std::vector<std::size_t> bitmask_subset(std::size_t level) const;

  /// Round-trippable token, e.g. "bu3-gray".
  [[nodiscard]] std::string token() const;

  friend bool operator==(const EncodingScheme&, const EncodingScheme&) = default;

private:
  EncodingScheme(EncodingKind kind, std::size_t d, std::size_t g, EncodingKind sub);
  void check_level(std::size_t level) const;

  EncodingKind kind_;
  std::size_t d_;
  std::size_t g_ = 0;
  EncodingKind sub_kind_ = EncodingKind::StdBinary;
};

[[nodiscard]] std::size_t ceil_log2(std::size_t n);
[[nodiscard]] std::uint64_t gray_code(std::uint64_t value);
[[nodiscard]] std::uint64_t gray_decode(std::uint64_t code);

/// Hamming distance; throws std::domain_error on width mismatch.
[[nodiscard]] std::size_t hamming(const BitString& a, const BitString& b);

/// CSV with a `decimal` column and one codeword column per scheme.
[[nodiscard]] std::string encoding_table_csv(std::span<const EncodingScheme> schemes,
                                             std::size_t rows);

}  // namespace quditmap
