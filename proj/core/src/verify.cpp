#include "gdet/verify.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "gdet/numtheory.hpp"
#include "gdet/rng.hpp"

namespace gdet {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// fixed salts for the sampled sub-checks, so reports are reproducible
constexpr u64 kAntisymmetrySalt = 0x616E746973796D00ULL;
constexpr u64 kTransformSalt = 0x6263646500000000ULL;
constexpr std::uint64_t kGridCap = 2'000'000;
constexpr std::uint64_t kTransformSamples = 20'000;

unsigned resolve_threads(unsigned threads) {
    if (threads != 0) return threads;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

unsigned plan_chunks(u64 total, unsigned threads) {
    const u64 t = std::min<u64>(resolve_threads(threads), std::max<u64>(total, 1));
    return static_cast<unsigned>(t);
}

// fn(begin, end, chunk) over a deterministic contiguous partition of
// [0, total) into exactly `chunks` pieces
template <typename Fn>
void run_chunks(u64 total, unsigned chunks, Fn&& fn) {
    if (total == 0) return;
    if (chunks <= 1) {
        fn(u64(0), total, 0u);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(chunks);
    const u64 per = total / chunks;
    const u64 extra = total % chunks;
    u64 begin = 0;
    for (unsigned c = 0; c < chunks; ++c) {
        const u64 len = per + (c < extra ? 1 : 0);
        const u64 lo = begin, hi = begin + len;
        pool.emplace_back([&fn, lo, hi, c, &errors] {
            try {
                fn(lo, hi, c);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
        begin += len;
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

struct ChunkTally {
    u64 checked = 0;
    u64 vacuous = 0;
    std::optional<std::string> counterexample;  // first one in index order

    void fail(const std::string& text) {
        if (!counterexample) counterexample = text;
    }
};

LemmaReport merge_chunks(std::string lemma, const std::vector<ChunkTally>& parts) {
    LemmaReport r;
    r.lemma = std::move(lemma);
    for (const auto& part : parts) {
        r.checked += part.checked;
        r.vacuous += part.vacuous;
        if (!r.counterexample && part.counterexample) r.counterexample = part.counterexample;
    }
    r.passed = !r.counterexample.has_value();
    return r;
}

int imod(i64 x, int m) {
    const i64 r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

bool is_pm3_mod8(i64 x) {
    const int r = imod(x, 8);
    return r == 3 || r == 5;
}

bool is_pm1_mod8(i64 x) {
    const int r = imod(x, 8);
    return r == 1 || r == 7;
}

std::string quad_str(i64 a, i64 b, i64 c, i64 d) {
    std::ostringstream os;
    os << "(" << a << ", " << b << ", " << c << ", " << d << ")";
    return os.str();
}

QuadVec quad(i64 a, i64 b, i64 c, i64 d) { return {Int(a), Int(b), Int(c), Int(d)}; }

// 0 counts as divisible by every prime; +-1 has no prime factor.
// Values here are small enough that trial division always completes.
bool has_no_prime_factor_pm3(i64 v) {
    if (v == 0) return false;
    u64 a = v < 0 ? static_cast<u64>(-v) : static_cast<u64>(v);
    if (a == 1) return true;
    for (std::uint32_t p : small_primes()) {
        if (u64(p) * p > a) break;
        if (a % p == 0) {
            if (p % 8 == 3 || p % 8 == 5) return false;
            while (a % p == 0) a /= p;
        }
    }
    if (a > 1 && (a % 8 == 3 || a % 8 == 5)) return false;
    return true;
}

// does v have a prime factor = 5 (mod 8)? (true for v = 0)
bool has_p5_prime_factor(const Int& value) {
    if (value == 0) return true;
    Int a = boost::multiprecision::abs(value);
    for (std::uint32_t p : small_primes()) {
        if (Int(p) * p > a) break;
        if (a % p == 0) {
            if (p % 8 == 5) return true;
            while (a % p == 0) a /= p;
        }
    }
    if (a == 1) return false;
    if (is_prime(a)) return residue(a, 8) == 5;
    return factor(a).has_prime_with_residue(5, 8);
}

Int uniform_bits(SplitMix64& rng, unsigned bits) {
    Int r = 0;
    while (bits >= 64) {
        r = (r << 64) | Int(rng.next());
        bits -= 64;
    }
    if (bits) r = (r << bits) | Int(rng.next() >> (64 - bits));
    return r;
}

Int uniform_in_pm(SplitMix64& rng, const Int& magnitude) {
    const Int span = 2 * magnitude + 1;
    const unsigned bits = bit_width(span);
    while (true) {
        Int r = uniform_bits(rng, bits);
        if (r < span) return r - magnitude;
    }
}

}  // namespace

// ---------------------------------------------------------------------------

LemmaReport check_remarks(int range_bound, unsigned threads, QuadDetFn det) {
    if (range_bound < 1) throw std::invalid_argument("check_remarks: bound must be >= 1");
    const QuadDetFn d = det ? std::move(det) : QuadDetFn([](const QuadVec& q) { return det_c4(q); });

    const u64 side = 2 * u64(range_bound) + 1;
    const u64 grid = side * side * side * side;
    const bool exhaustive = grid <= kGridCap;
    const u64 quad_total = exhaustive ? grid : kGridCap;

    const unsigned nq = plan_chunks(quad_total, threads);
    std::vector<ChunkTally> quad_parts(nq);
    run_chunks(quad_total, nq, [&](u64 lo, u64 hi, unsigned c) {
        ChunkTally& out = quad_parts[c];
        for (u64 idx = lo; idx < hi; ++idx) {
            i64 x[4];
            if (exhaustive) {
                u64 rest = idx;
                for (int j = 0; j < 4; ++j) {
                    x[j] = i64(rest % side) - range_bound;
                    rest /= side;
                }
            } else {
                SplitMix64 rng = SplitMix64::for_index(kAntisymmetrySalt, idx);
                for (int j = 0; j < 4; ++j) x[j] = rng.next_in(-range_bound, range_bound);
            }
            const Int lhs = d(quad(x[0], x[1], x[2], x[3]));
            const Int rhs = d(quad(x[1], x[2], x[3], x[0]));
            if (lhs != -rhs) {
                out.fail("antisymmetry fails at " + quad_str(x[0], x[1], x[2], x[3]) + ": " +
                         lhs.str() + " vs -(" + rhs.str() + ")");
            }
            ++out.checked;
            if (residue(lhs, 2) != imod(x[0] + x[1] + x[2] + x[3], 2)) {
                out.fail("det parity differs from coefficient-sum parity at " +
                         quad_str(x[0], x[1], x[2], x[3]));
            }
            ++out.checked;
        }
    });

    const unsigned nt = plan_chunks(kTransformSamples, threads);
    std::vector<ChunkTally> tf_parts(nt);
    run_chunks(kTransformSamples, nt, [&](u64 lo, u64 hi, unsigned c) {
        ChunkTally& out = tf_parts[c];
        for (u64 idx = lo; idx < hi; ++idx) {
            SplitMix64 rng = SplitMix64::for_index(kTransformSalt, idx);
            CoeffVec16 a;
            for (auto& entry : a) entry = rng.next_in(-range_bound, range_bound);
            const BcdeTransform t = bcde_transform(a);
            for (int i = 0; i < 4; ++i) {
                const int par = residue(t.b[i], 2);
                if (residue(t.c[i], 2) != par || residue(t.d[i], 2) != par ||
                    residue(t.e[i], 2) != par)
                    out.fail("transform components differ mod 2 at sample " +
                             std::to_string(idx));
                ++out.checked;
                if (t.b[i] + t.c[i] + t.d[i] + t.e[i] != 4 * a[i])
                    out.fail("b+c+d+e != 4a at sample " + std::to_string(idx));
                ++out.checked;
            }
            const int p0 = residue(d(t.b), 2);
            if (residue(d(t.c), 2) != p0 || residue(d(t.d), 2) != p0 ||
                residue(d(t.e), 2) != p0)
                out.fail("factor determinants differ mod 2 at sample " + std::to_string(idx));
            ++out.checked;
        }
    });

    std::vector<ChunkTally> all = quad_parts;
    all.insert(all.end(), tf_parts.begin(), tf_parts.end());
    LemmaReport r = merge_chunks("remarks", all);
    r.notes = (exhaustive ? "antisymmetry grid exhaustive, " : "antisymmetry grid sampled, ") +
              std::to_string(quad_total) + " quads; " + std::to_string(kTransformSamples) +
              " transform samples";
    return r;
}

LemmaReport check_lemma32() {
    ChunkTally out;
    for (int k = 0; k < 16; ++k) {
        for (int l = 0; l < 16; ++l) {
            for (int m = 0; m < 16; ++m) {
                for (int n = 0; n < 16; ++n) {
                    const Int v1 = det_c4(quad(2 * k + 1, 2 * l, 2 * m, 2 * n));
                    if (residue(v1, 16) != imod(8 * i64(m) + 1, 16))
                        out.fail("odd-lead congruence fails at " + quad_str(k, l, m, n));
                    ++out.checked;
                    const Int v2x = det_c4(quad(2 * k, 2 * l + 1, 2 * m + 1, 2 * n + 1));
                    if (residue(v2x, 16) != imod(8 * (i64(k) + l + n) - 3, 16))
                        out.fail("even-lead congruence fails at " + quad_str(k, l, m, n));
                    ++out.checked;
                }
            }
        }
    }
    LemmaReport r = merge_chunks("lemma32", {out});
    r.notes = "full residue system mod 16 in all four variables, both congruences";
    return r;
}

namespace {

// valuation-class assertion: exact ? v in 2^w Z_odd : v in 2^w Z (0 allowed)
bool valuation_holds(const Int& v, unsigned w, bool exact) {
    if (v == 0) return !exact;
    const unsigned val = v2(v);
    return exact ? val == w : val >= w;
}

}  // namespace

LemmaReport check_lemma44(int range_bound, unsigned threads) {
    if (range_bound < 2) throw std::invalid_argument("check_lemma44: bound must be >= 2");
    const u64 side = 2 * u64(range_bound);  // half-open [-b, b)
    const u64 total = side * side * side * side;

    const unsigned nc = plan_chunks(total, threads);
    std::vector<ChunkTally> parts(nc);
    run_chunks(total, nc, [&](u64 lo, u64 hi, unsigned c) {
        ChunkTally& out = parts[c];
        for (u64 idx = lo; idx < hi; ++idx) {
            u64 rest = idx;
            i64 k = i64(rest % side) - range_bound;
            rest /= side;
            i64 l = i64(rest % side) - range_bound;
            rest /= side;
            i64 m = i64(rest % side) - range_bound;
            rest /= side;
            i64 n = i64(rest % side) - range_bound;

            // all even
            {
                const Int v = det_c4(quad(2 * k, 2 * l, 2 * m, 2 * n));
                const bool odd_case = imod(k + m - l - n, 2) == 1;
                const bool ok = odd_case ? valuation_holds(v, 4, true)
                                         : valuation_holds(v, 8, false);
                if (!ok)
                    out.fail("all-even case fails at " + quad_str(k, l, m, n) + ", det " +
                             v.str());
                ++out.checked;
            }
            // all odd
            {
                const Int v = det_c4(quad(2 * k + 1, 2 * l + 1, 2 * m + 1, 2 * n + 1));
                bool ok;
                if (imod(k + m - l - n, 2) == 1)
                    ok = valuation_holds(v, 4, true);
                else if (imod((k + m) * (l + n), 4) == 3)
                    ok = valuation_holds(v, 7, true);
                else
                    ok = valuation_holds(v, 9, false);
                if (!ok)
                    out.fail("all-odd case fails at " + quad_str(k, l, m, n) + ", det " +
                             v.str());
                ++out.checked;
            }
            // alternating even/odd
            {
                const Int v = det_c4(quad(2 * k, 2 * l + 1, 2 * m, 2 * n + 1));
                bool ok;
                if (imod(k - m, 2) == 1 && imod(l - n, 2) == 1)
                    ok = valuation_holds(v, 5, true);
                else if (imod(k - m, 2) == 0 &&
                         is_pm3_mod8((2 * k + 2 * l + 1) * (2 * m + 2 * n + 1)))
                    ok = valuation_holds(v, 6, true);
                else
                    ok = valuation_holds(v, 7, false);
                if (!ok)
                    out.fail("alternating case fails at " + quad_str(k, l, m, n) + ", det " +
                             v.str());
                ++out.checked;
            }
            // even pair then odd pair
            {
                const Int v = det_c4(quad(2 * k, 2 * l, 2 * m + 1, 2 * n + 1));
                const bool ok = is_pm3_mod8((2 * k + 2 * m + 1) * (2 * l + 2 * n + 1))
                                    ? valuation_holds(v, 4, true)
                                    : valuation_holds(v, 5, false);
                if (!ok)
                    out.fail("paired case fails at " + quad_str(k, l, m, n) + ", det " +
                             v.str());
                ++out.checked;
            }
        }
    });
    LemmaReport r = merge_chunks("lemma44", parts);
    r.notes = "k,l,m,n in [-" + std::to_string(range_bound) + ", " +
              std::to_string(range_bound) + "), four parity patterns";
    return r;
}

// ---------------------------------------------------------------------------

namespace {

// parities (even, even, odd, odd); conclusion constrains the difference
// legs mod 16 given the residue class of the sum product
LemmaReport scan_lemma45(int b) {
    ChunkTally out;
    const i64 e = b - (b % 2);      // largest even magnitude in [-b, b]
    const i64 o = b % 2 ? b : b - 1;  // largest odd magnitude
    for (i64 x0 = -e; x0 <= e; x0 += 2) {
        for (i64 x1 = -e; x1 <= e; x1 += 2) {
            const int lead_mod4 = imod(x0 - x1, 4);  // 0 iff x0 = x1 (mod 4)
            for (i64 x2 = -o; x2 <= o; x2 += 2) {
                for (i64 x3 = -o; x3 <= o; x3 += 2) {
                    if (!is_pm3_mod8((x0 + x2) * (x1 + x3))) {
                        ++out.vacuous;
                        continue;
                    }
                    const i64 s = (x0 - x2) * (x0 - x2) + (x1 - x3) * (x1 - x3);
                    const int want = lead_mod4 == 0 ? 10 : 2;
                    if (imod(s, 16) != want)
                        out.fail("difference-legs residue fails at " +
                                 quad_str(x0, x1, x2, x3) + ", sum " + std::to_string(s));
                    ++out.checked;
                }
            }
        }
    }
    LemmaReport r = merge_chunks("lemma45", {out});
    r.notes = "entry bound " + std::to_string(b);
    return r;
}

// difference of squares of the sum legs, conditioned on having no prime
// factor = +-3 (mod 8); conclusion pins it mod 64. Depends only on the two
// sums, so the scan runs over them directly.
LemmaReport scan_lemma46(int b) {
    ChunkTally out;
    for (i64 p = -2 * b; p <= 2 * b; ++p) {
        for (i64 q = -2 * b; q <= 2 * b; ++q) {
            const bool case1 = is_pm3_mod8(p) && is_pm1_mod8(q);
            const bool case2 = is_pm1_mod8(p) && is_pm3_mod8(q);
            if (!case1 && !case2) {
                ++out.vacuous;
                continue;
            }
            const i64 value = p * p - q * q;
            if (!has_no_prime_factor_pm3(value)) {
                ++out.vacuous;
                continue;
            }
            const int want = case1 ? 8 : 64 - 8;
            if (imod(value, 64) != want)
                out.fail("square-difference residue fails at sums (" + std::to_string(p) +
                         ", " + std::to_string(q) + "), value " + std::to_string(value));
            ++out.checked;
        }
    }
    LemmaReport r = merge_chunks("lemma46", {out});
    r.notes = "sum legs in [-" + std::to_string(2 * b) + ", " + std::to_string(2 * b) + "]";
    return r;
}

// sum of squares of the difference legs, both legs = +-3 (mod 8) and the
// sum free of +-3 (mod 8) prime factors: some prime factor p = a^2+b^2
// = 1 (mod 8) with a+b = +-3 (mod 8) must appear
LemmaReport scan_lemma47(int b) {
    ChunkTally out;
    std::unordered_map<i64, bool> pprime_cache;
    auto is_pprime = [&](i64 p) {
        auto it = pprime_cache.find(p);
        if (it != pprime_cache.end()) return it->second;
        const bool yes = classify_prime(Int(p)) == PrimeClass::P1_prime;
        pprime_cache.emplace(p, yes);
        return yes;
    };
    auto has_pprime_factor = [&](i64 v) {
        u64 a = static_cast<u64>(v < 0 ? -v : v);
        for (std::uint32_t p : small_primes()) {
            if (u64(p) * p > a) break;
            if (a % p == 0) {
                if (p % 8 == 1 && is_pprime(p)) return true;
                while (a % p == 0) a /= p;
            }
        }
        return a > 1 && a % 8 == 1 && is_pprime(i64(a));
    };
    for (i64 d1 = -2 * b; d1 <= 2 * b; ++d1) {
        if (!is_pm3_mod8(d1)) {
            out.vacuous += 4 * b + 1;
            continue;
        }
        for (i64 d2 = -2 * b; d2 <= 2 * b; ++d2) {
            if (!is_pm3_mod8(d2)) {
                ++out.vacuous;
                continue;
            }
            const i64 s = d1 * d1 + d2 * d2;
            if (!has_no_prime_factor_pm3(s)) {
                ++out.vacuous;
                continue;
            }
            if (!has_pprime_factor(s))
                out.fail("no qualifying prime factor in " + std::to_string(s) +
                         " from difference legs (" + std::to_string(d1) + ", " +
                         std::to_string(d2) + ")");
            ++out.checked;
        }
    }
    LemmaReport r = merge_chunks("lemma47", {out});
    r.notes = "difference legs in [-" + std::to_string(2 * b) + ", " + std::to_string(2 * b) +
              "]";
    return r;
}

// parities (even, even, odd, odd), sum product = +-1 (mod 8), leading
// entries different mod 4: the determinant gains a prime factor = 5 (mod 8)
LemmaReport scan_lemma410(int b, unsigned threads) {
    std::vector<i64> evens, odds;
    for (i64 x = -b; x <= b; ++x) ((x & 1) == 0 ? evens : odds).push_back(x);
    const u64 ne = evens.size(), no = odds.size();
    const u64 total = ne * ne * no * no;
    const unsigned nc = plan_chunks(total, threads);
    std::vector<ChunkTally> parts(nc);
    run_chunks(total, nc, [&](u64 lo, u64 hi, unsigned c) {
        ChunkTally& out = parts[c];
        for (u64 idx = lo; idx < hi; ++idx) {
            u64 rest = idx;
            const i64 x0 = evens[rest % ne];
            rest /= ne;
            const i64 x1 = evens[rest % ne];
            rest /= ne;
            const i64 x2 = odds[rest % no];
            rest /= no;
            const i64 x3 = odds[rest % no];

            if (!is_pm1_mod8((x0 + x2) * (x1 + x3)) || imod(x0 - x1, 4) == 0) {
                ++out.vacuous;
                continue;
            }
            const Int v = det_c4(quad(x0, x1, x2, x3));
            if (!has_p5_prime_factor(v))
                out.fail("determinant " + v.str() + " at " + quad_str(x0, x1, x2, x3) +
                         " has no prime factor = 5 (mod 8)");
            ++out.checked;
        }
    });
    LemmaReport r = merge_chunks("lemma410", parts);
    r.notes = "entry bound " + std::to_string(b);
    return r;
}

LemmaReport with_quota(const std::function<LemmaReport(int)>& scan, int bound, u64 quota) {
    constexpr int kMaxDoublings = 4;
    for (int attempt = 0;; ++attempt) {
        LemmaReport r = scan(bound);
        if (r.checked >= quota) return r;
        if (attempt >= kMaxDoublings) {
            r.inconclusive = true;
            r.notes += "; only " + std::to_string(r.checked) +
                       " non-vacuous cases, quota " + std::to_string(quota) +
                       " unreached after raising the bound to " + std::to_string(bound);
            return r;
        }
        bound *= 2;
    }
}

}  // namespace

std::vector<LemmaReport> check_lemmas45_410(int range_bound, std::uint64_t min_nonvacuous,
                                            unsigned threads) {
    if (range_bound < 4) throw std::invalid_argument("check_lemmas45_410: bound must be >= 4");
    std::vector<LemmaReport> out;
    out.push_back(with_quota([](int b) { return scan_lemma45(b); }, range_bound, min_nonvacuous));
    out.push_back(with_quota([](int b) { return scan_lemma46(b); }, range_bound, min_nonvacuous));
    out.push_back(with_quota([](int b) { return scan_lemma47(b); }, range_bound, min_nonvacuous));
    out.push_back(with_quota([&](int b) { return scan_lemma410(b, threads); }, range_bound,
                             min_nonvacuous));
    return out;
}

// ---------------------------------------------------------------------------

SearchSummary search_cross_validate(SearchMode mode, std::uint64_t budget, int entry_bound,
                                    std::uint64_t seed, unsigned threads, CoeffDetFn det,
                                    ClassifyFn classify) {
    if (budget < 1) throw std::invalid_argument("search: budget must be >= 1");
    if (mode == SearchMode::Random && entry_bound < 1)
        throw std::invalid_argument("search: entry bound must be >= 1");
    const CoeffDetFn d =
        det ? std::move(det) : CoeffDetFn([](const CoeffVec16& a) { return det_c4c2c2(a); });
    const ClassifyFn cl =
        classify ? std::move(classify) : ClassifyFn([](const Int& v) { return classify_c4c2c2(v); });

    const u64 total = mode == SearchMode::Exhaustive01 ? (u64(1) << 16) : budget;

    struct Chunk {
        std::set<Int> values;
        std::vector<std::pair<CoeffVec16, Int>> violations;
    };
    const unsigned nc = plan_chunks(total, threads);
    std::vector<Chunk> parts(nc);
    run_chunks(total, nc, [&](u64 lo, u64 hi, unsigned c) {
        Chunk& out = parts[c];
        for (u64 idx = lo; idx < hi; ++idx) {
            CoeffVec16 a;
            if (mode == SearchMode::Exhaustive01) {
                for (int j = 0; j < 16; ++j) a[j] = int((idx >> j) & 1);
            } else {
                SplitMix64 rng = SplitMix64::for_index(seed, idx);
                for (auto& entry : a) entry = rng.next_in(-entry_bound, entry_bound);
            }
            Int v = d(a);
            if (!cl(v).member) out.violations.emplace_back(a, v);
            out.values.insert(std::move(v));
        }
    });

    SearchSummary summary;
    summary.vectors_tested = total;
    std::set<Int> distinct;
    for (auto& part : parts) {
        distinct.merge(part.values);
        summary.violations.insert(summary.violations.end(), part.violations.begin(),
                                  part.violations.end());
    }
    summary.values_seen = distinct.size();
    return summary;
}

// ---------------------------------------------------------------------------

LemmaReport check_inclusion_chain(std::uint64_t sample_budget, const Int& magnitude_bound,
                                  std::uint64_t seed) {
    if (magnitude_bound < 1)
        throw std::invalid_argument("check_inclusion_chain: magnitude bound must be >= 1");
    static constexpr GroupTag kChain[] = {GroupTag::C2x2x2x2, GroupTag::C4xC2xC2,
                                          GroupTag::C4xC4,    GroupTag::C8xC2,
                                          GroupTag::D16,      GroupTag::C16};
    constexpr int kGaps = 5;

    LemmaReport r;
    r.lemma = "chain";
    std::optional<Int> witness[kGaps];

    for (u64 idx = 0; idx < sample_budget; ++idx) {
        SplitMix64 rng = SplitMix64::for_index(seed, idx);
        const Int v = uniform_in_pm(rng, magnitude_bound);
        bool member[6];
        for (int g = 0; g < 6; ++g) member[g] = classify_group(kChain[g], v).member;
        for (int g = 0; g < kGaps; ++g) {
            if (member[g] && !member[g + 1] && !r.counterexample)
                r.counterexample = "v = " + v.str() + " is in S(" +
                                   std::string(to_string(kChain[g])) + ") but not S(" +
                                   to_string(kChain[g + 1]) + ")";
            ++r.checked;
            if (!witness[g] && member[g + 1] && !member[g]) witness[g] = v;
        }
    }

    // deterministic outward sweep for any gap the samples missed
    for (int g = 0; g < kGaps; ++g) {
        if (witness[g]) continue;
        for (Int t = 1; t <= magnitude_bound && !witness[g]; ++t) {
            for (const Int& v : {t, Int(-t)}) {
                if (classify_group(kChain[g + 1], v).member &&
                    !classify_group(kChain[g], v).member) {
                    witness[g] = v;
                    break;
                }
            }
        }
    }

    std::ostringstream notes;
    notes << "strictness witnesses:";
    for (int g = 0; g < kGaps; ++g) {
        notes << " " << to_string(kChain[g]) << "<" << to_string(kChain[g + 1]) << ": ";
        if (witness[g]) {
            notes << witness[g]->str();
        } else {
            notes << "none within bound";
            r.inconclusive = true;
        }
        if (g + 1 < kGaps) notes << ";";
    }
    r.notes = notes.str();
    r.passed = !r.counterexample.has_value();
    return r;
}

}  // namespace gdet
