#include "orbifold/verification.hpp"

#include <set>
#include <sstream>

#include "orbifold/unity.hpp"

namespace orbifold {

namespace {

struct Check {
    CheckRecord rec;

    Check(std::string name, const Weights& w) {
        rec.name = std::move(name);
        rec.weights = w.entries();
    }

    void count_input() { ++rec.inputs; }

    template <typename Describe>
    void require(bool ok, Describe&& describe) {
        if (!ok && rec.passed) {
            rec.passed = false;
            rec.counterexample = describe();
        }
    }

    CheckRecord take() { return std::move(rec); }
};

std::string gstr(const UnityRational& g) { return g.arg().str(); }

// Arguments exercised by the identity checks: every sector argument, the
// full |w|-th root group, and all pairwise products of sector arguments
// (bounded for very large inputs). Includes elements outside the sector
// union, which the inverse/threshold identities also cover.
std::vector<UnityRational> argument_sample(const Weights& w, const SectorEnumeration& sectors) {
    std::set<Rational> args;
    const auto& base = sectors.distinct_args();
    for (const UnityRational& g : base) args.insert(g.arg());
    for (std::int64_t j = 0; j < w.total(); ++j) args.insert(Rational(j, w.total()));
    if (base.size() * base.size() <= 20000) {
        for (const UnityRational& a : base)
            for (const UnityRational& b : base) args.insert((a * b).arg());
    }
    std::vector<UnityRational> sample;
    sample.reserve(args.size());
    for (const Rational& a : args) sample.emplace_back(a);
    return sample;
}

Rational weighted_frac(const UnityRational& g, std::int64_t wi) {
    return (g.arg() * Rational(wi)).frac();
}

} // namespace

void VerificationReport::merge(VerificationReport other) {
    for (CheckRecord& r : other.records_) records_.push_back(std::move(r));
}

bool VerificationReport::passed() const {
    for (const CheckRecord& r : records_)
        if (!r.passed) return false;
    return true;
}

std::int64_t VerificationReport::total_inputs() const {
    std::int64_t sum = 0;
    for (const CheckRecord& r : records_) sum += r.inputs;
    return sum;
}

RingBundle RingBundle::make(const Weights& w) {
    XiMap xi(w);
    FrobeniusTable chow_table = structure_table(xi.chow());
    FrobeniusTable model_table = structure_table(xi.model());
    return RingBundle{std::move(xi), std::move(chow_table), std::move(model_table)};
}

VerificationReport verify_combinatorics(const Weights& w) {
    VerificationReport report;
    SectorEnumeration sectors(w);
    const std::vector<UnityRational> sample = argument_sample(w, sectors);
    const std::vector<UnityRational>& sector_args = sectors.distinct_args();
    const int n = w.n();
    const std::int64_t total = w.total();

    {
        Check c("combinatorics/fixed-set-inverse-symmetry", w);
        for (const UnityRational& g : sample) {
            c.count_input();
            c.require(fixed_set(g, w) == fixed_set(g.inverse(), w), [&] {
                return "g=" + gstr(g) + ": fixed sets of g and g^-1 differ";
            });
        }
        report.add(c.take());
    }
    {
        Check c("combinatorics/fractional-part-inverse", w);
        for (const UnityRational& g : sample) {
            IndexSet ig = fixed_set(g, w);
            for (int i = 0; i <= n; ++i) {
                c.count_input();
                Rational lhs = weighted_frac(g, w[i]);
                Rational rhs = ig.contains(i)
                                   ? Rational()
                                   : Rational(1) - weighted_frac(g.inverse(), w[i]);
                c.require(lhs == rhs, [&] {
                    return "g=" + gstr(g) + ", i=" + std::to_string(i) + ": {gamma(g)w_i}=" +
                           lhs.str() + ", expected " + rhs.str();
                });
            }
        }
        report.add(c.take());
    }
    {
        Check c("combinatorics/age-inverse-sum", w);
        for (const UnityRational& g : sample) {
            c.count_input();
            Rational lhs = age(g, w) + age(g.inverse(), w);
            Rational rhs = Rational(n + 1 - fixed_set(g, w).size());
            c.require(lhs == rhs, [&] {
                return "g=" + gstr(g) + ": a(g)+a(g^-1)=" + lhs.str() + ", expected " + rhs.str();
            });
        }
        report.add(c.take());
    }
    {
        Check c("combinatorics/enumeration-prefix-count", w);
        for (const UnityRational& g : sample) {
            c.count_input();
            std::int64_t count = 0;
            for (int k = 0; k < sectors.size(); ++k)
                if (sectors.arg(k).arg() <= g.arg()) ++count;
            std::int64_t expected = n + 1;
            for (int i = 0; i <= n; ++i) expected += (g.arg() * Rational(w[i])).floor();
            c.require(count == expected, [&] {
                return "g=" + gstr(g) + ": prefix count " + std::to_string(count) +
                       ", closed form " + std::to_string(expected);
            });
        }
        report.add(c.take());
    }
    {
        Check c("combinatorics/kmin-window", w);
        for (const UnityRational& g : sector_args) {
            std::int64_t lo = k_min(g, w);
            int count = fixed_set(g, w).size();
            for (int d = 0; d < count; ++d) {
                c.count_input();
                c.require(sectors.arg(static_cast<int>(lo) + d) == g, [&] {
                    return "g=" + gstr(g) + ", d=" + std::to_string(d) + ": gamma_s(k_min+d)=" +
                           gstr(sectors.arg(static_cast<int>(lo) + d)) + ", expected " + gstr(g);
                });
            }
        }
        report.add(c.take());
    }
    {
        Check c("combinatorics/kmin-kmax-closed-form", w);
        for (const UnityRational& g : sector_args) {
            c.count_input();
            std::int64_t brute_min = -1, brute_max = -1;
            for (int k = 0; k < sectors.size(); ++k) {
                if (sectors.arg(k) == g) {
                    if (brute_min < 0) brute_min = k;
                    brute_max = k;
                }
            }
            std::int64_t closed_min = k_min(g, w);
            std::int64_t closed_max = k_max(g, w);
            c.require(closed_min == brute_min && closed_max == brute_max, [&] {
                return "g=" + gstr(g) + ": closed form [" + std::to_string(closed_min) + "," +
                       std::to_string(closed_max) + "], enumeration [" +
                       std::to_string(brute_min) + "," + std::to_string(brute_max) + "]";
            });
            c.require(closed_max == closed_min + fixed_set(g, w).size() - 1, [&] {
                return "g=" + gstr(g) + ": k_max - k_min + 1 != #I(g)";
            });
        }
        report.add(c.take());
    }
    {
        Check c("combinatorics/kmin-threshold", w);
        for (const UnityRational& g : sample) {
            std::int64_t lo = k_min(g, w);
            bool in_union = in_sector_union(g, w);
            c.require(lo >= 0 && lo <= total, [&] {
                return "g=" + gstr(g) + ": k_min=" + std::to_string(lo) + " outside [0,|w|]";
            });
            for (int k = 0; k < sectors.size(); ++k) {
                c.count_input();
                bool past = k >= lo;
                bool arg_ge = sectors.arg(k).arg() >= g.arg();
                bool arg_gt = sectors.arg(k).arg() > g.arg();
                c.require(past == arg_ge, [&] {
                    return "g=" + gstr(g) + ", k=" + std::to_string(k) +
                           ": k>=k_min is " + (past ? "true" : "false") +
                           " but gamma_s(k)>=gamma(g) is " + (arg_ge ? "true" : "false");
                });
                if (!in_union) {
                    c.require(past == arg_gt, [&] {
                        return "g=" + gstr(g) + " (outside sector union), k=" +
                               std::to_string(k) + ": strict threshold violated";
                    });
                }
            }
        }
        report.add(c.take());
    }
    {
        Check c("combinatorics/product-fraction-partition", w);
        for (const UnityRational& g : sector_args) {
            for (const UnityRational& h : sector_args) {
                c.count_input();
                SectorPartition parts = sector_partition(g, h, w);
                int covered = parts.fixed_union.size() + parts.product_only.size() +
                              parts.j_gh.size() + parts.j_inv.size();
                IndexSet all = parts.fixed_union.unioned(parts.product_only)
                                   .unioned(parts.j_gh)
                                   .unioned(parts.j_inv);
                c.require(covered == n + 1 && all.size() == n + 1, [&] {
                    return "g=" + gstr(g) + ", h=" + gstr(h) +
                           ": parts are not a partition of [0,n] (sizes sum to " +
                           std::to_string(covered) + ")";
                });
                UnityRational gh = g * h;
                auto excess = [&](int i) {
                    return weighted_frac(g, w[i]) + weighted_frac(h, w[i]) -
                           weighted_frac(gh, w[i]);
                };
                auto expect = [&](const IndexSet& part, const Rational& value,
                                  const char* which) {
                    for (int i : part) {
                        c.require(excess(i) == value, [&] {
                            return "g=" + gstr(g) + ", h=" + gstr(h) + ", i=" +
                                   std::to_string(i) + " in " + which + ": excess " +
                                   excess(i).str() + ", expected " + value.str();
                        });
                    }
                };
                expect(parts.fixed_union, Rational(0), "I(g)|I(h)");
                expect(parts.product_only, Rational(1), "I(gh) minus both");
                expect(parts.j_gh, Rational(1), "J(g,h)");
                expect(parts.j_inv, Rational(0), "J(g^-1,h^-1)");
            }
        }
        report.add(c.take());
    }
    {
        Check c("combinatorics/age-product-excess", w);
        for (const UnityRational& g : sector_args) {
            for (const UnityRational& h : sector_args) {
                c.count_input();
                SectorPartition parts = sector_partition(g, h, w);
                Rational lhs = age(g, w) + age(h, w) - age(g * h, w);
                Rational rhs = Rational(parts.product_only.size() + parts.j_gh.size());
                c.require(lhs == rhs, [&] {
                    return "g=" + gstr(g) + ", h=" + gstr(h) + ": a(g)+a(h)-a(gh)=" + lhs.str() +
                           ", expected " + rhs.str();
                });
            }
        }
        report.add(c.take());
    }
    {
        Check c("combinatorics/enumeration-bijection", w);
        std::multiset<std::pair<Rational, int>> seen;
        for (int k = 0; k < sectors.size(); ++k)
            seen.emplace(sectors.arg(k).arg(), sectors.origin(k));
        std::multiset<std::pair<Rational, int>> expected;
        for (int i = 0; i <= n; ++i)
            for (std::int64_t k = 0; k < w[i]; ++k)
                expected.emplace(Rational(k, w[i]), i);
        c.count_input();
        c.require(sectors.size() == total && seen == expected, [&] {
            return "enumeration table is not a bijection onto the sector union";
        });
        for (const UnityRational& g : sector_args) {
            c.count_input();
            std::int64_t fiber = 0;
            for (int k = 0; k < sectors.size(); ++k)
                if (sectors.arg(k) == g) ++fiber;
            c.require(fiber == fixed_set(g, w).size(), [&] {
                return "g=" + gstr(g) + ": fiber size " + std::to_string(fiber) +
                       ", expected #I(g)=" + std::to_string(fixed_set(g, w).size());
            });
        }
        report.add(c.take());
    }
    return report;
}

VerificationReport verify_degree_lemmas(const ModelRing& ring) {
    VerificationReport report;
    const Weights& w = ring.weights();
    const std::int64_t total = w.total();
    const Rational n(w.n());

    {
        Check c("model/degree-bounds", w);
        for (std::int64_t j = 0; j < total; ++j) {
            c.count_input();
            UnityRational g = ring.sectors().arg(static_cast<int>(j));
            Rational lower = age(g.inverse(), w);
            Rational upper = n - age(g, w);
            const Rational& deg = ring.degree(j);
            c.require(Rational(0) <= lower && lower <= deg && deg <= upper && upper <= n, [&] {
                return "j=" + std::to_string(j) + ": chain 0<=" + lower.str() + "<=" + deg.str() +
                       "<=" + upper.str() + "<=" + n.str() + " broken";
            });
        }
        report.add(c.take());
    }
    {
        Check c("model/degree-subadditive", w);
        for (std::int64_t j = 0; j < total; ++j) {
            for (std::int64_t k = 0; k < total; ++k) {
                c.count_input();
                Rational sum = ring.degree(j) + ring.degree(k);
                const Rational& deg = ring.degree((j + k) % total);
                c.require(deg <= sum, [&] {
                    return "j=" + std::to_string(j) + ", k=" + std::to_string(k) +
                           ": deg(xi^(j+k))=" + deg.str() + " exceeds " + sum.str();
                });
            }
        }
        report.add(c.take());
    }
    {
        Check c("model/degree-kmin-decomposition", w);
        for (const UnityRational& g : ring.sectors().distinct_args()) {
            std::int64_t lo = k_min(g, w);
            int count = fixed_set(g, w).size();
            for (int d = 0; d < count; ++d) {
                c.count_input();
                Rational expected = age(g.inverse(), w) + Rational(d);
                const Rational& deg = ring.degree(lo + d);
                c.require(deg == expected, [&] {
                    return "g=" + gstr(g) + ", d=" + std::to_string(d) + ": deg(xi^(k_min+d))=" +
                           deg.str() + ", expected a(g^-1)+d=" + expected.str();
                });
            }
        }
        report.add(c.take());
    }
    {
        Check c("model/dual-involution", w);
        Rational top(1, w.product());
        for (std::int64_t j = 0; j < total; ++j) {
            c.count_input();
            std::int64_t dual = ring.dual_index(j);
            c.require(ring.dual_index(dual) == j, [&] {
                return "j=" + std::to_string(j) + ": dual(dual(j))=" +
                       std::to_string(ring.dual_index(dual)) + " != j";
            });
            c.require((j + dual) % total == w.n() % total, [&] {
                return "j=" + std::to_string(j) + ": j+dual(j)=" + std::to_string(j + dual) +
                       " != n mod |w|";
            });
            c.require(ring.degree(j) + ring.degree(dual) == Rational(w.n()), [&] {
                return "j=" + std::to_string(j) + ": deg(xi^j)+deg(xi^dual) != n";
            });
            for (std::int64_t k = 0; k < total; ++k) {
                Rational value = ring.pairing(j, k);
                Rational expected = (k == dual) ? top : Rational();
                c.require(value == expected, [&] {
                    return "j=" + std::to_string(j) + ", k=" + std::to_string(k) +
                           ": pairing " + value.str() + ", expected " + expected.str();
                });
            }
        }
        report.add(c.take());
    }
    {
        Check c("model/integral-support", w);
        for (std::int64_t j = 0; j < total; ++j) {
            c.count_input();
            bool top_untwisted =
                ring.sectors().arg(static_cast<int>(j)).is_identity() &&
                ring.degree(j) == Rational(w.n());
            c.require(top_untwisted == (j == w.n()), [&] {
                return "j=" + std::to_string(j) +
                       ": untwisted top-degree condition disagrees with j==n";
            });
        }
        report.add(c.take());
    }
    {
        Check c("model/poincare-symmetry", w);
        auto poly = ring.poincare_polynomial();
        for (const auto& [deg, mult] : poly) {
            c.count_input();
            auto it = poly.find(n - deg);
            int mirrored = it == poly.end() ? 0 : it->second;
            c.require(mirrored == mult, [&] {
                return "degree " + deg.str() + " has multiplicity " + std::to_string(mult) +
                       " but degree " + (n - deg).str() + " has " + std::to_string(mirrored);
            });
        }
        report.add(c.take());
    }
    {
        Check c("model/gorenstein-integral-degrees", w);
        if (is_gorenstein(w)) {
            for (std::int64_t j = 0; j < total; ++j) {
                c.count_input();
                c.require(ring.degree(j).is_integer(), [&] {
                    return "j=" + std::to_string(j) + ": degree " + ring.degree(j).str() +
                           " not an integer although every weight divides |w|";
                });
            }
        }
        report.add(c.take());
    }
    return report;
}

VerificationReport verify_frobenius(const FrobeniusTable& t) {
    VerificationReport report;
    Weights w = Weights::make(t.weights);
    const std::size_t dim = t.dim();
    const std::string prefix = "frobenius/" + t.ring + "/";
    constexpr std::size_t kZero = FrobeniusTable::kZero;
    auto label = [&](std::size_t i) { return t.labels[i]; };
    auto gram_or_zero = [&](std::size_t p, std::size_t c) {
        return p == kZero ? Rational() : t.gram_at(p, c);
    };

    {
        Check c(prefix + "unit", w);
        c.count_input();
        c.require(t.degrees[t.unit].is_zero(), [&] {
            return label(t.unit) + " has degree " + t.degrees[t.unit].str() + ", expected 0";
        });
        for (std::size_t i = 0; i < dim; ++i) {
            c.count_input();
            c.require(t.product_at(t.unit, i) == i && t.product_at(i, t.unit) == i, [&] {
                return label(i) + ": product with the unit is not the identity map";
            });
        }
        report.add(c.take());
    }
    {
        Check c(prefix + "commutativity", w);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                c.count_input();
                c.require(t.product_at(i, j) == t.product_at(j, i), [&] {
                    return label(i) + " cup " + label(j) + " differs from the swapped product";
                });
                c.require(t.gram_at(i, j) == t.gram_at(j, i), [&] {
                    return "<" + label(i) + ", " + label(j) + "> is not symmetric";
                });
            }
        }
        report.add(c.take());
    }
    {
        Check c(prefix + "graded-product", w);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                c.count_input();
                std::size_t p = t.product_at(i, j);
                if (p == kZero) continue;
                c.require(t.degrees[p] == t.degrees[i] + t.degrees[j], [&] {
                    return label(i) + " cup " + label(j) + " = " + label(p) + ": degree " +
                           t.degrees[p].str() + " != " +
                           (t.degrees[i] + t.degrees[j]).str();
                });
            }
        }
        report.add(c.take());
    }
    {
        Check c(prefix + "associativity", w);
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t b = 0; b < dim; ++b) {
                std::size_t ab = t.product_at(a, b);
                for (std::size_t d = 0; d < dim; ++d) {
                    c.count_input();
                    std::size_t lhs = ab == kZero ? kZero : t.product_at(ab, d);
                    std::size_t bd = t.product_at(b, d);
                    std::size_t rhs = bd == kZero ? kZero : t.product_at(a, bd);
                    c.require(lhs == rhs, [&] {
                        auto name = [&](std::size_t p) {
                            return p == kZero ? std::string("0") : label(p);
                        };
                        return "(" + label(a) + " cup " + label(b) + ") cup " + label(d) + " = " +
                               name(lhs) + " but " + label(a) + " cup (" + label(b) + " cup " +
                               label(d) + ") = " + name(rhs);
                    });
                }
            }
        }
        report.add(c.take());
    }
    {
        Check c(prefix + "pairing-compatibility", w);
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t b = 0; b < dim; ++b) {
                std::size_t ab = t.product_at(a, b);
                for (std::size_t d = 0; d < dim; ++d) {
                    c.count_input();
                    Rational lhs = gram_or_zero(ab, d);
                    std::size_t bd = t.product_at(b, d);
                    Rational rhs = bd == kZero ? Rational() : t.gram_at(a, bd);
                    c.require(lhs == rhs, [&] {
                        return "<" + label(a) + " cup " + label(b) + ", " + label(d) + "> = " +
                               lhs.str() + " but <" + label(a) + ", " + label(b) + " cup " +
                               label(d) + "> = " + rhs.str();
                    });
                }
            }
        }
        report.add(c.take());
    }
    {
        Check c(prefix + "pairing-perfect", w);
        c.count_input();
        c.require(gram_invertible(t), [&] {
            return "Gram matrix of the pairing is singular";
        });
        report.add(c.take());
    }
    return report;
}

VerificationReport verify_isomorphism(const RingBundle& bundle) {
    VerificationReport report;
    const ChowRing& chow = bundle.xi.chow();
    const Weights& w = chow.weights();
    const FrobeniusTable& ct = bundle.chow_table;
    const FrobeniusTable& mt = bundle.model_table;
    const std::size_t dim = ct.dim();
    constexpr std::size_t kZero = FrobeniusTable::kZero;

    // Recomputed from first principles rather than trusting the prebuilt map.
    std::vector<std::int64_t> images;
    images.reserve(dim);
    for (const ChowBasisIndex& b : chow.basis())
        images.push_back(k_min(b.g.inverse(), w) + b.d);

    {
        Check c("isomorphism/basis-bijection", w);
        std::vector<bool> hit(dim, false);
        for (std::size_t i = 0; i < dim; ++i) {
            c.count_input();
            std::int64_t j = images[i];
            bool fresh = j >= 0 && j < static_cast<std::int64_t>(dim) &&
                         !hit[static_cast<std::size_t>(j)];
            c.require(fresh, [&] {
                return ct.labels[i] + " -> xi^" + std::to_string(j) +
                       " repeats or leaves the exponent range";
            });
            if (j >= 0 && j < static_cast<std::int64_t>(dim))
                hit[static_cast<std::size_t>(j)] = true;
        }
        report.add(c.take());
    }

    // The remaining checks need the images to index the model table.
    if (!report.passed()) return report;
    auto pi = [&](std::size_t i) { return static_cast<std::size_t>(images[i]); };

    {
        Check c("isomorphism/graded", w);
        for (std::size_t i = 0; i < dim; ++i) {
            c.count_input();
            c.require(ct.degrees[i] == mt.degrees[pi(i)], [&] {
                return ct.labels[i] + " has degree " + ct.degrees[i].str() + " but " +
                       mt.labels[pi(i)] + " has degree " + mt.degrees[pi(i)].str();
            });
        }
        report.add(c.take());
    }
    {
        Check c("isomorphism/ring-morphism", w);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                c.count_input();
                std::size_t p = ct.product_at(i, j);
                std::size_t expected = p == kZero ? kZero : pi(p);
                std::size_t actual = mt.product_at(pi(i), pi(j));
                c.require(actual == expected, [&] {
                    auto name = [&](std::size_t q) {
                        return q == kZero ? std::string("0") : mt.labels[q];
                    };
                    return "image of " + ct.labels[i] + " cup " + ct.labels[j] + " is " +
                           name(expected) + " but the model product is " + name(actual);
                });
            }
        }
        report.add(c.take());
    }
    {
        Check c("isomorphism/pairing-compatibility", w);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                c.count_input();
                c.require(ct.gram_at(i, j) == mt.gram_at(pi(i), pi(j)), [&] {
                    return "<" + ct.labels[i] + ", " + ct.labels[j] + "> = " +
                           ct.gram_at(i, j).str() + " but the model pairing is " +
                           mt.gram_at(pi(i), pi(j)).str();
                });
            }
        }
        report.add(c.take());
    }
    {
        Check c("isomorphism/unit-and-duals", w);
        c.count_input();
        c.require(pi(ct.unit) == mt.unit, [&] {
            return "unit maps to " + mt.labels[pi(ct.unit)] + ", expected " +
                   mt.labels[mt.unit];
        });
        const ModelRing& model = bundle.xi.model();
        for (std::size_t i = 0; i < dim; ++i) {
            c.count_input();
            std::size_t partner = kZero;
            for (std::size_t j = 0; j < dim; ++j) {
                if (!ct.gram_at(i, j).is_zero()) {
                    partner = j;
                    break;
                }
            }
            c.require(partner != kZero, [&] {
                return ct.labels[i] + " pairs with nothing";
            });
            if (partner == kZero) continue;
            std::int64_t dual = model.dual_index(images[i]);
            c.require(static_cast<std::int64_t>(pi(partner)) == dual, [&] {
                return "dual of " + ct.labels[i] + " maps to " + mt.labels[pi(partner)] +
                       " but dual_index gives xi^" + std::to_string(dual);
            });
        }
        report.add(c.take());
    }
    return report;
}

VerificationReport verify_bundle(const RingBundle& bundle) {
    const Weights& w = bundle.xi.chow().weights();
    VerificationReport report = verify_combinatorics(w);
    {
        Check c("chow/basis-count", w);
        c.count_input();
        c.require(bundle.xi.chow().dim() == static_cast<std::size_t>(w.total()), [&] {
            return "basis has " + std::to_string(bundle.xi.chow().dim()) + " elements, expected " +
                   std::to_string(w.total());
        });
        report.add(c.take());
    }
    report.merge(verify_degree_lemmas(bundle.xi.model()));
    report.merge(verify_frobenius(bundle.chow_table));
    report.merge(verify_frobenius(bundle.model_table));
    report.merge(verify_isomorphism(bundle));
    return report;
}

VerificationReport verify_all(const Weights& w) {
    return verify_bundle(RingBundle::make(w));
}

} // namespace orbifold
