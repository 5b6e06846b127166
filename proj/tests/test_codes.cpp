#include <doctest.h>

#include <set>

#include "quditmap/codes.hpp"

using namespace quditmap;

TEST_CASE("encode matches the reference codewords") {
  CHECK(EncodingScheme::gray(16).encode(2).to_string() == "0011");
  CHECK(EncodingScheme::unary(9).encode(0).to_string() == "000000001");
  CHECK(EncodingScheme::std_binary(16).encode(8).to_string() == "1000");
  const auto bu = EncodingScheme::block_unary(9, 3, EncodingKind::Gray);
  CHECK(bu.encode(4).to_string_grouped(2) == "00 11 00");
  CHECK(EncodingScheme::block_unary(9, 3).encode(0).to_string_grouped(2) == "00 00 01");
}

TEST_CASE("encode rejects out-of-range levels") {
  CHECK_THROWS_AS((void)EncodingScheme::gray(5).encode(5), std::domain_error);
  CHECK_THROWS_AS((void)EncodingScheme::unary(1), std::domain_error);
}

TEST_CASE("decode inverts the reference codewords") {
  CHECK(EncodingScheme::gray(16).decode(BitString::parse("0011")) == 2);
  CHECK(EncodingScheme::unary(9).decode(BitString::parse("000000001")) == 0);
  CHECK_THROWS_AS((void)EncodingScheme::unary(9).decode(BitString::parse("000000011")), InvalidCodeword);
  CHECK_THROWS_AS((void)EncodingScheme::unary(9).decode(BitString::parse("000000000")), InvalidCodeword);
  // 0111 is level 7 in SB, which does not exist for d = 6.
  CHECK_THROWS_AS((void)EncodingScheme::std_binary(6).decode(BitString::parse("111")), InvalidCodeword);
  CHECK_THROWS_AS((void)EncodingScheme::block_unary(9, 3).decode(BitString::parse("01 00 01")), InvalidCodeword);
  CHECK_THROWS_AS((void)EncodingScheme::block_unary(9, 3).decode(BitString::parse("00 00 00")), InvalidCodeword);
  CHECK_THROWS_AS((void)EncodingScheme::gray(16).decode(BitString::parse("011")), InvalidCodeword);
}

TEST_CASE("bitmask subsets") {
  CHECK(EncodingScheme::unary(9).bitmask_subset(3) == std::vector<std::size_t>{3});
  CHECK(EncodingScheme::gray(16).bitmask_subset(5) == std::vector<std::size_t>{0, 1, 2, 3});
  const auto bu = EncodingScheme::block_unary(9, 3);
  const auto subset = bu.bitmask_subset(4);
  CHECK(subset == std::vector<std::size_t>{2, 3});
  // Level 4 is decodable from block 1 alone: the block holds the only set bits.
  const BitString cw = bu.encode(4);
  for (std::size_t q = 0; q < cw.width(); ++q) {
    if (cw.test(q)) CHECK(std::find(subset.begin(), subset.end(), q) != subset.end());
  }
}

TEST_CASE("hamming distance") {
  CHECK(hamming(BitString::parse("0000"), BitString::parse("0000")) == 0);
  const auto sb = EncodingScheme::std_binary(16);
  CHECK(hamming(sb.encode(3), sb.encode(4)) == 3);
  CHECK_THROWS_AS((void)hamming(BitString::parse("01"), BitString::parse("001")), std::domain_error);
}

TEST_CASE("qubit counts") {
  CHECK(EncodingScheme::std_binary(5).qubit_count() == 3);
  CHECK(EncodingScheme::gray(16).qubit_count() == 4);
  CHECK(EncodingScheme::unary(7).qubit_count() == 7);
  CHECK(EncodingScheme::block_unary(9, 3).qubit_count() == 6);
  CHECK(EncodingScheme::block_unary(10, 2).qubit_count() == 10);
  CHECK(EncodingScheme::block_unary(10, 1).qubit_count() == 10);
}

TEST_CASE("property: round trip, widths and code structure for d in [2, 64]") {
  for (std::size_t d = 2; d <= 64; ++d) {
    std::vector<EncodingScheme> schemes = {EncodingScheme::unary(d), EncodingScheme::std_binary(d),
                                           EncodingScheme::gray(d)};
    for (std::size_t g = 1; g <= 7; ++g) {
      schemes.push_back(EncodingScheme::block_unary(d, g, EncodingKind::StdBinary));
      schemes.push_back(EncodingScheme::block_unary(d, g, EncodingKind::Gray));
    }
    for (const auto& s : schemes) {
      std::set<std::uint64_t> seen;
      for (std::size_t l = 0; l < d; ++l) {
        const BitString cw = s.encode(l);
        REQUIRE(cw.width() == s.qubit_count());
        CHECK(s.decode(cw) == l);
        CHECK(seen.insert(cw.bits()).second);
        if (s.kind() == EncodingKind::Unary) CHECK(cw.popcount() == 1);
        if (s.kind() == EncodingKind::BlockUnary) {
          std::size_t occupied = 0;
          for (std::size_t b = 0; b < s.block_count(); ++b) {
            const std::uint64_t block = (cw.bits() >> (b * s.block_width())) & ((1ULL << s.block_width()) - 1);
            if (block != 0) ++occupied;
          }
          CHECK(occupied == 1);
        }
      }
    }
    const auto gray = EncodingScheme::gray(d);
    for (std::size_t l = 0; l + 1 < d; ++l) CHECK(hamming(gray.encode(l), gray.encode(l + 1)) == 1);
  }
}

TEST_CASE("encoding tokens round trip") {
  for (const char* tok : {"unary", "sb", "gray", "bu3-sb", "bu2-gray"}) {
    CHECK(EncodingScheme::from_token(tok, 9).token() == tok);
  }
  CHECK(EncodingScheme::from_token("bu3", 9) == EncodingScheme::block_unary(9, 3));
  CHECK_THROWS_AS((void)EncodingScheme::from_token("bux", 9), std::invalid_argument);
  CHECK_THROWS_AS((void)EncodingScheme::from_token("onehot", 9), std::invalid_argument);
}

TEST_CASE("encoding table CSV") {
  const std::vector<EncodingScheme> schemes = {EncodingScheme::std_binary(9), EncodingScheme::gray(9)};
  const std::string csv = encoding_table_csv(schemes, 3);
  CHECK(csv == "decimal,sb,gray\n0,0000,0000\n1,0001,0001\n2,0010,0011\n");
}
