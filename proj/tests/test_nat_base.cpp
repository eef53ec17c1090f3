#include <stdexcept>

#include "doctest.h"
#include "logdepth/base.hpp"
#include "logdepth/rng.hpp"

using namespace logdepth;

namespace {
Nat random_nat(Rng& rng, uint64_t max_bits) {
  uint64_t bits = rng.below(max_bits + 1);
  Nat n;
  for (uint64_t i = 0; i < bits; ++i)
    if (rng.coin()) n.set_bit(i, true);
  return n;
}
Nat ev(BaseFn fn, std::initializer_list<Nat> args) {
  return eval_base(fn, std::span<const Nat>(args.begin(), args.size()));
}
}  // namespace

TEST_CASE("nat basics") {
  CHECK(Nat(0).length() == 0);
  CHECK(Nat(1).length() == 1);
  CHECK(Nat(53).to_binary() == "110101");
  CHECK(Nat::from_binary("110101") == Nat(53));
  CHECK(Nat::from_hex("ff") == Nat(255));
  CHECK(Nat(255).to_hex() == "ff");
  CHECK(Nat(53).popcount() == 4);
  CHECK(len2(Nat(53)) == 3);  // |53| = 6, ||53|| = 3

  Rng rng(7);
  for (int it = 0; it < 500; ++it) {
    uint64_t a = rng.next() >> rng.below(64), b = rng.next() >> rng.below(64);
    CHECK((Nat(a) + Nat(b)).to_u64() + 0 == a + b);
    CHECK(Nat(a).monus(Nat(b)) == Nat(a > b ? a - b : 0));
    CHECK((Nat(a) < Nat(b)) == (a < b));
    uint64_t i = rng.below(70), j = rng.below(70);
    uint64_t expect = j <= i || i >= 64 ? 0 : (a >> i) & (j - i >= 64 ? ~0ULL : (1ULL << (j - i)) - 1);
    CHECK(Nat(a).part(i, j) == Nat(expect));
  }
}

TEST_CASE("nat wide values") {
  Nat big = Nat::power_of_two(1000);
  CHECK(big.length() == 1001);
  CHECK(big.bit(1000));
  CHECK_FALSE(big.bit(999));
  CHECK(big.monus(Nat(1)) == Nat::ones(1000));
  CHECK(Nat::ones(1000) + Nat(1) == big);
  CHECK(big.part(990, 2000) == Nat::power_of_two(10));
  CHECK(big.shr(1000) == Nat(1));
}

TEST_CASE("part examples") {
  CHECK(ev(BaseFn::part, {Nat(53), Nat(1), Nat(4)}) == Nat(2));
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    Nat x = random_nat(rng, 80);
    CHECK(ev(BaseFn::part, {x, Nat(5), Nat(3)}) == Nat(0));  // j <= i -> 0
  }
  CHECK(ev(BaseFn::half, {Nat(1)}) == Nat(0));
  CHECK(ev(BaseFn::length, {Nat(0)}) == Nat(0));
  CHECK(ev(BaseFn::monus, {Nat(3), Nat(7)}) == Nat(0));
}

TEST_CASE("part length bound") {
  Rng rng(13);
  for (int it = 0; it < 300; ++it) {
    Nat x = random_nat(rng, 100);
    uint64_t i = rng.below(110), j = i + rng.below(40);
    Nat p = x.part(i, j);
    CHECK(p < Nat::power_of_two(j - i));
    // numeric length is at most min(j, |x|) - i
    uint64_t bound = std::min(j, x.length());
    bound = bound > i ? bound - i : 0;
    CHECK(p.length() <= bound);
  }
}

TEST_CASE("smash pad multi") {
  CHECK(ev(BaseFn::smash, {Nat(5), Nat(3)}) == Nat::power_of_two(6));
  CHECK(ev(BaseFn::smash, {Nat(0), Nat(3)}) == Nat(1));  // |0| = 0
  // |x # y| = |x| * |y| + 1
  Rng rng(17);
  for (int it = 0; it < 100; ++it) {
    Nat x = random_nat(rng, 40), y = random_nat(rng, 40);
    CHECK(ev(BaseFn::smash, {x, y}).length() == x.length() * y.length() + 1);
    CHECK(ev(BaseFn::pad, {x, y}) == x.shl(y.length()));
  }
  CHECK(ev(BaseFn::multi, {Nat(3), Nat(4), Nat(7), Nat(15)}) == Nat(12));
  CHECK(ev(BaseFn::multi, {Nat(4), Nat(4), Nat(7), Nat(15)}) == Nat(0));  // i > |x|
}

TEST_CASE("basic axioms as executable checks") {
  Rng rng(19);
  for (int it = 0; it < 200; ++it) {
    Nat x = random_nat(rng, 70);
    uint64_t j = rng.below(70);
    // x * 2^{|0|} = x
    CHECK(ev(BaseFn::pad, {x, Nat(0)}) == x);
    // (2x)[0, j+1) = 2 * (x[0, j))
    CHECK(x.shl(1).part(0, j + 1) == x.part(0, j).shl(1));
    // (2x+1)[0, j+1) = 2 * (x[0, j)) + 1
    CHECK((x.shl(1) + Nat(1)).part(0, j + 1) == x.part(0, j).shl(1) + Nat(1));
    // i < j -> x[i+1, j+1) = half(x)[i, j)  (digit shift)
    uint64_t i = rng.below(69);
    if (i < j) CHECK(x.part(i + 1, j + 1) == x.half().part(i, j));
    // x >= y -> (x+1) - y = (x - y) + 1
    Nat y = random_nat(rng, 70);
    if (x >= y) CHECK((x + Nat(1)).monus(y) == x.monus(y) + Nat(1));
  }
}

TEST_CASE("concat word") {
  CHECK(concat_word(Nat(5), Nat(3)) == Nat(11));
  CHECK_THROWS_AS(concat_word(Nat(0), Nat(3)), std::invalid_argument);
  CHECK_THROWS_AS(concat_word(Nat(3), Nat(0)), std::invalid_argument);
  Rng rng(23);
  for (int it = 0; it < 200; ++it) {
    Nat x = random_nat(rng, 40) + Nat(1);
    Nat y = random_nat(rng, 40) + Nat(1);
    Nat z = random_nat(rng, 40) + Nat(1);
    CHECK(concat_word(Nat(1), x) == x);
    CHECK(concat_word(x, Nat(1)) == x);
    CHECK(concat_word(concat_word(x, y), z) == concat_word(x, concat_word(y, z)));
    CHECK(concat_word(x, y).length() == x.length() + y.length() - 1);
  }
}
