#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "quditmap/pauli.hpp"

using namespace quditmap;

namespace {

std::map<std::string, Complex> as_map(const PauliSum& sum) {
  std::map<std::string, Complex> out;
  const PauliSum simplified = simplify(sum);
  for (const auto& t : simplified.terms()) out[t.axes] = t.weight;
  return out;
}

bool same_terms(const std::map<std::string, Complex>& a, const std::map<std::string, oracle::cplx>& b,
                double tol = 1e-10) {
  if (a.size() != b.size()) return false;
  for (const auto& [axes, w] : a) {
    auto it = b.find(axes);
    if (it == b.end() || std::abs(it->second - w) > tol) return false;
  }
  return true;
}

// Dense 2^n matrix of sum_{l,l'} op(l,l') |enc l><enc l'| for a compact code.
oracle::Dense embedded(const DLevelOperator& op, const EncodingScheme& scheme) {
  const std::size_t n = scheme.qubit_count();
  oracle::Dense m = oracle::zeros(std::size_t{1} << n);
  for (const auto& [idx, v] : op.entries()) m[scheme.encode(idx.first).bits()][scheme.encode(idx.second).bits()] += v;
  return m;
}

}  // namespace

TEST_CASE("unary |0><1| expands into XX, XY, YX, YY quarters") {
  const auto sum = map_entry(0, 1, EncodingScheme::unary(2));
  const auto terms = as_map(sum);
  REQUIRE(terms.size() == 4);
  CHECK(std::abs(terms.at("XX") - Complex(0.25, 0)) < 1e-15);
  CHECK(std::abs(terms.at("XY") - Complex(0, 0.25)) < 1e-15);
  CHECK(std::abs(terms.at("YX") - Complex(0, -0.25)) < 1e-15);
  CHECK(std::abs(terms.at("YY") - Complex(0.25, 0)) < 1e-15);
}

TEST_CASE("SB |0><0| is (I + Z)/2") {
  const auto terms = as_map(map_entry(0, 0, EncodingScheme::std_binary(2)));
  REQUIRE(terms.size() == 2);
  CHECK(std::abs(terms.at("I") - 0.5) < 1e-15);
  CHECK(std::abs(terms.at("Z") - 0.5) < 1e-15);
}

TEST_CASE("number operator in SB, d = 4") {
  const auto sum = simplify(encode_operator(number_op(4), EncodingScheme::std_binary(4)));
  CHECK(sum.to_text() == "1.5 II\n-1 IZ\n-0.5 ZI\n");
}

TEST_CASE("q in SB, d = 2 is X / sqrt 2") {
  const auto terms = as_map(encode_operator(position_op(2), EncodingScheme::std_binary(2)));
  REQUIRE(terms.size() == 1);
  CHECK(terms.at("X").real() == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("property: compact encodings agree with the trace decomposition") {
  for (std::size_t d = 2; d <= 16; ++d) {
    for (const auto& scheme : {EncodingScheme::std_binary(d), EncodingScheme::gray(d)}) {
      for (const char* name : {"n", "q", "p", "q2", "sx", "sy"}) {
        const auto op = std::get<DLevelOperator>(make_operator(name, d));
        const auto ref = oracle::trace_decompose(embedded(op, scheme), scheme.qubit_count());
        CHECK_MESSAGE(same_terms(as_map(encode_operator(op, scheme)), ref), name << " d=" << d << " " << scheme.token());
      }
    }
  }
}

TEST_CASE("property: each mapped entry equals the projector on its bitmask subset") {
  for (std::size_t d = 2; d <= 6; ++d) {
    std::vector<EncodingScheme> schemes = {EncodingScheme::unary(d), EncodingScheme::std_binary(d),
                                           EncodingScheme::gray(d), EncodingScheme::block_unary(d, 2),
                                           EncodingScheme::block_unary(d, 3, EncodingKind::Gray)};
    for (const auto& s : schemes) {
      for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t lp = 0; lp < d; ++lp) {
          std::vector<std::size_t> subset = s.bitmask_subset(l);
          for (std::size_t q : s.bitmask_subset(lp))
            if (std::find(subset.begin(), subset.end(), q) == subset.end()) subset.push_back(q);
          const auto dense =
              oracle::projector_on_subset(s.encode(l).bits(), s.encode(lp).bits(), subset, s.qubit_count());
          const auto ref = oracle::trace_decompose(dense, s.qubit_count());
          CHECK_MESSAGE(same_terms(as_map(map_entry(l, lp, s)), ref), s.token() << " " << l << "," << lp);
        }
      }
    }
  }
}

TEST_CASE("property: paired-term length histogram follows the binomial distribution for l != l'") {
  for (std::size_t k = 1; k <= 6; ++k) {
    const std::size_t d = std::size_t{1} << k;
    for (const auto& scheme : {EncodingScheme::std_binary(d), EncodingScheme::gray(d)}) {
      for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t lp = l + 1; lp < d; ++lp) {
          PauliSum pair = map_entry(l, lp, scheme);
          pair.append(map_entry(lp, l, scheme));
          const auto hist = length_histogram(simplify(pair));
          const std::size_t h = hamming(scheme.encode(l), scheme.encode(lp));
          for (std::size_t p = 0; p <= k; ++p) {
            const double expected = p < h ? 0.0 : 0.5 * std::ldexp(1.0, static_cast<int>(h)) * oracle::binom(k - h, p - h);
            const auto it = hist.find(p);
            const double got = it == hist.end() ? 0.0 : static_cast<double>(it->second);
            REQUIRE(got == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("diagonal paired terms do not follow the binomial count") {
  // |l><l| alone gives 2^K strings of every length pattern, not 2^(h-1) C(K, p).
  const auto hist = length_histogram(simplify(map_entry(0, 0, EncodingScheme::std_binary(16))));
  CHECK(hist.at(0) == 1);
  CHECK(hist.at(1) == 4);
  CHECK(hist.at(4) == 1);
}

TEST_CASE("property: Hermitian operators encode to real weights") {
  for (std::size_t d = 2; d <= 9; ++d) {
    for (const auto& name : operator_names()) {
      for (const auto& s : {EncodingScheme::unary(d), EncodingScheme::gray(d), EncodingScheme::block_unary(d, 2)}) {
        const auto sum = simplify(encode(make_operator(name, d), s));
        for (const auto& t : sum.terms()) REQUIRE(std::abs(t.weight.imag()) < 1e-12);
      }
    }
  }
}

TEST_CASE("property: unary strings stay short") {
  for (std::size_t d = 2; d <= 12; ++d) {
    for (const auto& name : operator_names()) {
      const auto sum = simplify(encode(make_operator(name, d), EncodingScheme::unary(d)));
      CHECK(max_length(sum) <= (is_two_particle_name(name) ? 4U : 2U));
    }
  }
}

TEST_CASE("two-particle encoding places particle B above particle A") {
  const auto s = EncodingScheme::std_binary(2);
  const auto sum = simplify(encode_two_particle(number_op(2), position_op(2), s));
  const auto terms = as_map(sum);
  REQUIRE(terms.size() == 2);
  CHECK(terms.at("IX").real() == doctest::Approx(0.5 / std::sqrt(2.0)));
  CHECK(terms.at("ZX").real() == doctest::Approx(-0.5 / std::sqrt(2.0)));
}

TEST_CASE("simplify merges, drops and sorts") {
  PauliSum sum(2);
  sum.add({Complex(1.0), "ZI"});
  sum.add({Complex(0.5), "IX"});
  sum.add({Complex(-1.0), "ZI"});
  sum.add({Complex(1e-14), "XX"});
  sum.add({Complex(0.25), "IX"});
  sum.add({Complex(2.0), "II"});
  const auto out = simplify(sum);
  CHECK(out.to_text() == "2 II\n0.75 IX\n");
}

TEST_CASE("tensor concatenates registers") {
  PauliSum a(1, {{Complex(2.0), "X"}});
  PauliSum b(2, {{Complex(0.5), "ZY"}, {Complex(1.0), "II"}});
  const auto t = tensor(a, b);
  CHECK(t.width() == 3);
  CHECK(simplify(t).to_text() == "2 XII\n1 XZY\n");
}

TEST_CASE("text round trip and validation") {
  const auto sum = simplify(encode_operator(op_power(position_op(5), 2), EncodingScheme::gray(5)));
  const auto back = PauliSum::from_text(sum.to_text());
  REQUIRE(back.size() == sum.size());
  for (std::size_t i = 0; i < sum.size(); ++i) {
    CHECK(back.terms()[i].axes == sum.terms()[i].axes);
    CHECK(back.terms()[i].weight.real() == sum.terms()[i].weight.real());
  }
  PauliSum bad(2);
  CHECK_THROWS((void)bad.add({Complex(1.0), "XYZ"}));
  CHECK_THROWS((void)bad.add({Complex(1.0), "XA"}));
  CHECK_THROWS((void)encode_operator(number_op(3), EncodingScheme::std_binary(4)));
}

TEST_CASE("string length and support") {
  const PauliString s{Complex(1.0), "IXIZY"};
  CHECK(s.length() == 3);
  CHECK(s.support() == std::vector<std::size_t>{1, 3, 4});
}
