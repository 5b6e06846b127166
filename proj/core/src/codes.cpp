#include "quditmap/codes.hpp"

#include <bit>
#include <charconv>
#include <sstream>

namespace quditmap {

namespace {

std::uint64_t low_mask(std::size_t width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

std::uint64_t compact_value(EncodingKind kind, std::uint64_t value) {
  return kind == EncodingKind::Gray ? gray_code(value) : value;
}

std::uint64_t compact_inverse(EncodingKind kind, std::uint64_t code) {
  return kind == EncodingKind::Gray ? gray_decode(code) : code;
}

}  // namespace

BitString::BitString(std::size_t width, std::uint64_t bits) : width_(width), bits_(bits) {
  if (width > kMaxWidth) {
    throw std::domain_error("BitString width " + std::to_string(width) + " exceeds 64");
  }
  if ((bits & ~low_mask(width)) != 0) {
    throw std::domain_error("BitString has bits set beyond its width");
  }
}

BitString BitString::parse(std::string_view text) {
  std::uint64_t bits = 0;
  std::size_t width = 0;
  for (char c : text) {
    if (c == ' ') continue;
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BitString::parse: unexpected character '" +
                                  std::string(1, c) + "'");
    }
    if (width == kMaxWidth) throw std::domain_error("BitString::parse: more than 64 bits");
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    ++width;
  }
  return BitString(width, bits);
}

bool BitString::test(std::size_t i) const {
  if (i >= width_) throw std::out_of_range("BitString::test: index out of range");
  return ((bits_ >> i) & 1U) != 0;
}

std::size_t BitString::popcount() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::string BitString::to_string() const {
  std::string out(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) {
    if ((bits_ >> i) & 1U) out[width_ - 1 - i] = '1';
  }
  return out;
}

std::string BitString::to_string_grouped(std::size_t group) const {
  if (group == 0) return to_string();
  const std::string flat = to_string();
  std::string out;
  // Groups are aligned to qubit 0, i.e. to the right end of the string.
  const std::size_t lead = flat.size() % group;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (i != 0 && (i + group - lead) % group == 0) out.push_back(' ');
    out.push_back(flat[i]);
  }
  return out;
}

std::string_view to_string(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::Unary: return "unary";
    case EncodingKind::StdBinary: return "sb";
    case EncodingKind::Gray: return "gray";
    case EncodingKind::BlockUnary: return "bu";
  }
  return "?";
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

std::uint64_t gray_code(std::uint64_t value) { return value ^ (value >> 1); }

std::uint64_t gray_decode(std::uint64_t code) {
  std::uint64_t value = code;
  for (std::uint64_t shift = code >> 1; shift != 0; shift >>= 1) value ^= shift;
  return value;
}

EncodingScheme::EncodingScheme(EncodingKind kind, std::size_t d, std::size_t g, EncodingKind sub)
    : kind_(kind), d_(d), g_(g), sub_kind_(sub) {
  if (d < 2) throw std::domain_error("encoding requires d >= 2");
  if (qubit_count() > BitString::kMaxWidth) {
    throw std::domain_error("encoding needs more than 64 qubits");
  }
}

EncodingScheme EncodingScheme::unary(std::size_t d) {
  return {EncodingKind::Unary, d, 0, EncodingKind::StdBinary};
}

EncodingScheme EncodingScheme::std_binary(std::size_t d) {
  return {EncodingKind::StdBinary, d, 0, EncodingKind::StdBinary};
}

EncodingScheme EncodingScheme::gray(std::size_t d) {
  return {EncodingKind::Gray, d, 0, EncodingKind::StdBinary};
}

EncodingScheme EncodingScheme::block_unary(std::size_t d, std::size_t g, EncodingKind sub_kind) {
  if (g < 1) throw std::domain_error("block unary requires g >= 1");
  if (sub_kind != EncodingKind::StdBinary && sub_kind != EncodingKind::Gray) {
    throw std::domain_error("block unary sub-encoding must be sb or gray");
  }
  return {EncodingKind::BlockUnary, d, g, sub_kind};
}

EncodingScheme EncodingScheme::from_token(std::string_view token, std::size_t d) {
  if (token == "unary") return unary(d);
  if (token == "sb") return std_binary(d);
  if (token == "gray") return gray(d);
  if (token.starts_with("bu")) {
    std::string_view rest = token.substr(2);
    std::size_t g = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), g);
    if (ec != std::errc{} || ptr == rest.data()) {
      throw std::invalid_argument("bad block-unary token '" + std::string(token) + "'");
    }
    std::string_view sub(ptr, static_cast<std::size_t>(rest.data() + rest.size() - ptr));
    if (sub.empty() || sub == "-sb") return block_unary(d, g, EncodingKind::StdBinary);
    if (sub == "-gray") return block_unary(d, g, EncodingKind::Gray);
    throw std::invalid_argument("bad block-unary sub-encoding in '" + std::string(token) + "'");
  }
  throw std::invalid_argument("unknown encoding '" + std::string(token) + "'");
}

std::size_t EncodingScheme::block_width() const {
  return kind_ == EncodingKind::BlockUnary ? ceil_log2(g_ + 1) : 0;
}

std::size_t EncodingScheme::block_count() const {
  return kind_ == EncodingKind::BlockUnary ? (d_ + g_ - 1) / g_ : 0;
}

std::size_t EncodingScheme::qubit_count() const {
  switch (kind_) {
    case EncodingKind::Unary: return d_;
    case EncodingKind::StdBinary:
    case EncodingKind::Gray: return ceil_log2(d_);
    case EncodingKind::BlockUnary: return block_count() * block_width();
  }
  return 0;
}

void EncodingScheme::check_level(std::size_t level) const {
  if (level >= d_) {
    throw std::domain_error("level " + std::to_string(level) + " out of range for d=" +
                            std::to_string(d_));
  }
}

BitString EncodingScheme::encode(std::size_t level) const {
  check_level(level);
  switch (kind_) {
    case EncodingKind::Unary: return {d_, std::uint64_t{1} << level};
    case EncodingKind::StdBinary:
    case EncodingKind::Gray: return {qubit_count(), compact_value(kind_, level)};
    case EncodingKind::BlockUnary: {
      const std::size_t block = level / g_;
      const std::uint64_t sub = compact_value(sub_kind_, level % g_ + 1);
      return {qubit_count(), sub << (block * block_width())};
    }
  }
  throw std::logic_error("unreachable");
}

std::size_t EncodingScheme::decode(const BitString& codeword) const {
  if (codeword.width() != qubit_count()) {
    throw InvalidCodeword("codeword width " + std::to_string(codeword.width()) +
                          " does not match " + std::to_string(qubit_count()) + " qubits");
  }
  const std::uint64_t bits = codeword.bits();
  switch (kind_) {
    case EncodingKind::Unary: {
      if (std::popcount(bits) != 1) {
        throw InvalidCodeword("unary codeword must have exactly one set bit: " +
                              codeword.to_string());
      }
      return static_cast<std::size_t>(std::countr_zero(bits));
    }
    case EncodingKind::StdBinary:
    case EncodingKind::Gray: {
      const std::uint64_t level = compact_inverse(kind_, bits);
      if (level >= d_) {
        throw InvalidCodeword("compact codeword " + codeword.to_string() +
                              " decodes beyond d=" + std::to_string(d_));
      }
      return static_cast<std::size_t>(level);
    }
    case EncodingKind::BlockUnary: {
      const std::size_t width = block_width();
      const std::uint64_t mask = low_mask(width);
      std::size_t occupied = block_count();
      std::uint64_t sub = 0;
      for (std::size_t b = 0; b < block_count(); ++b) {
        const std::uint64_t value = (bits >> (b * width)) & mask;
        if (value == 0) continue;
        if (occupied != block_count()) {
          throw InvalidCodeword("block unary codeword has more than one occupied block: " +
                                codeword.to_string());
        }
        occupied = b;
        sub = value;
      }
      if (occupied == block_count()) {
        throw InvalidCodeword("block unary codeword has no occupied block");
      }
      const std::uint64_t offset = compact_inverse(sub_kind_, sub);
      const std::size_t level = occupied * g_ + static_cast<std::size_t>(offset) - 1;
      if (offset < 1 || offset > g_ || level >= d_) {
        throw InvalidCodeword("block unary sub-codeword out of range: " + codeword.to_string());
      }
      return level;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<std::size_t> EncodingScheme::bitmask_subset(std::size_t level) const {
  check_level(level);
  std::vector<std::size_t> qubits;
  switch (kind_) {
    case EncodingKind::Unary: qubits.push_back(level); break;
    case EncodingKind::StdBinary:
    case EncodingKind::Gray:
      for (std::size_t q = 0; q < qubit_count(); ++q) qubits.push_back(q);
      break;
    case EncodingKind::BlockUnary: {
      const std::size_t first = (level / g_) * block_width();
      for (std::size_t q = 0; q < block_width(); ++q) qubits.push_back(first + q);
      break;
    }
  }
  return qubits;
}

std::string EncodingScheme::token() const {
  if (kind_ != EncodingKind::BlockUnary) return std::string(to_string(kind_));
  return "bu" + std::to_string(g_) + "-" + std::string(to_string(sub_kind_));
}

std::size_t hamming(const BitString& a, const BitString& b) {
  if (a.width() != b.width()) {
    throw std::domain_error("hamming: width mismatch (" + std::to_string(a.width()) + " vs " +
                            std::to_string(b.width()) + ")");
  }
  return static_cast<std::size_t>(std::popcount(a.bits() ^ b.bits()));
}

std::string encoding_table_csv(std::span<const EncodingScheme> schemes, std::size_t rows) {
  std::ostringstream out;
  out << "decimal";
  for (const auto& s : schemes) out << ',' << s.token();
  out << '\n';
  for (std::size_t l = 0; l < rows; ++l) {
    out << l;
    for (const auto& s : schemes) {
      out << ',';
      if (l < s.levels()) out << s.encode(l).to_string();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace quditmap
