#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "gatecolor/bitset.hpp"
#include "gatecolor/simd/bitset_kernels.hpp"

using namespace gatecolor;
using simd::Isa;
using simd::Word;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution bit(density);
  std::vector<Word> out(n, 0);
  for (auto& w : out) {
    for (int b = 0; b < 64; ++b) {
      if (bit(rng)) w |= Word{1} << b;
    }
  }
  return out;
}

std::vector<Isa> available() {
  std::vector<Isa> out{Isa::Scalar};
  if (simd::isa_supported(Isa::Avx2)) out.push_back(Isa::Avx2);
  return out;
}

struct IsaGuard {
  Isa saved = simd::active().isa;
  ~IsaGuard() { simd::select_isa(saved); }
};

}  // namespace

TEST_CASE("scalar kernels match a per-bit reference") {
  std::mt19937_64 rng(1);
  for (std::size_t n : {0, 1, 3, 4, 5, 17}) {
    const auto a = random_words(rng, n, 0.3);
    const auto b = random_words(rng, n, 0.3);
    std::size_t both = 0;
    std::size_t ones = 0;
    for (std::size_t i = 0; i < n * 64; ++i) {
      const bool x = (a[i / 64] >> (i % 64)) & 1;
      const bool y = (b[i / 64] >> (i % 64)) & 1;
      ones += x;
      both += x && y;
    }
    CHECK(simd::scalar::popcount(a.data(), n) == ones);
    CHECK(simd::scalar::and_popcount(a.data(), b.data(), n) == both);
    CHECK(simd::scalar::intersects(a.data(), b.data(), n) == (both > 0));
  }
}

TEST_CASE("every supported ISA agrees with the scalar kernels") {
  std::mt19937_64 rng(7);
  for (Isa isa : available()) {
    CAPTURE(simd::isa_name(isa));
    const auto& k = simd::kernels_for(isa);
    CHECK(k.isa == isa);
    for (std::size_t n = 0; n <= 70; ++n) {
      for (double density : {0.0, 0.01, 0.5, 1.0}) {
        for (std::size_t offset : {0, 1, 3}) {
          auto a = random_words(rng, n + offset, density);
          auto b = random_words(rng, n + offset, 0.02);
          const Word* pa = a.data() + offset;
          const Word* pb = b.data() + offset;
          CHECK(k.intersects(pa, pb, n) == simd::scalar::intersects(pa, pb, n));
          CHECK(k.popcount(pa, n) == simd::scalar::popcount(pa, n));
          CHECK(k.and_popcount(pa, pb, n) == simd::scalar::and_popcount(pa, pb, n));

          auto or_ref = a;
          auto or_got = a;
          simd::scalar::or_into(or_ref.data() + offset, pb, n);
          k.or_into(or_got.data() + offset, pb, n);
          CHECK(or_ref == or_got);

          auto and_ref = a;
          auto and_got = a;
          simd::scalar::and_into(and_ref.data() + offset, pb, n);
          k.and_into(and_got.data() + offset, pb, n);
          CHECK(and_ref == and_got);
        }
      }
    }
  }
}

TEST_CASE("single shared bit is found at every position") {
  for (Isa isa : available()) {
    const auto& k = simd::kernels_for(isa);
    const std::size_t n = 13;
    for (std::size_t bit = 0; bit < n * 64; ++bit) {
      std::vector<Word> a(n, 0);
      std::vector<Word> b(n, 0);
      a[bit / 64] = b[bit / 64] = Word{1} << (bit % 64);
      REQUIRE(k.intersects(a.data(), b.data(), n));
      b[bit / 64] = 0;
      REQUIRE_FALSE(k.intersects(a.data(), b.data(), n));
    }
  }
}

TEST_CASE("dispatch") {
  IsaGuard guard;
  CHECK(simd::isa_supported(Isa::Scalar));
  CHECK(simd::isa_supported(simd::best_supported_isa()));
  simd::select_isa(Isa::Scalar);
  CHECK(simd::active().isa == Isa::Scalar);
  if (!simd::isa_supported(Isa::Avx2)) {
    CHECK_THROWS_AS(simd::select_isa(Isa::Avx2), std::invalid_argument);
  }
  CHECK(simd::isa_name(Isa::Scalar) == "scalar");
  CHECK(simd::isa_name(Isa::Avx2) == "avx2");
}

TEST_CASE("DynamicBitset behaves the same under each ISA") {
  IsaGuard guard;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pos(0, 299);
  for (Isa isa : available()) {
    simd::select_isa(isa);
    DynamicBitset a(300);
    DynamicBitset b(300);
    std::set<std::size_t> sa;
    std::set<std::size_t> sb;
    for (int i = 0; i < 40; ++i) {
      const auto x = pos(rng);
      const auto y = pos(rng);
      a.set(x);
      sa.insert(x);
      b.set(y);
      sb.insert(y);
    }
    CHECK(a.count() == sa.size());
    bool common = false;
    for (auto x : sa) common = common || sb.count(x);
    CHECK(a.intersects(b.words()) == common);

    DynamicBitset u = a;
    u.or_with(b.words());
    std::set<std::size_t> su = sa;
    su.insert(sb.begin(), sb.end());
    std::vector<std::size_t> listed;
    u.for_each_set([&](std::size_t i) { listed.push_back(i); });
    CHECK(listed == std::vector<std::size_t>(su.begin(), su.end()));

    DynamicBitset all(130);
    all.set_all();
    CHECK(all.count() == 130);
    all.reset(5);
    CHECK_FALSE(all.test(5));
    all.clear();
    CHECK(all.none());
  }
}
