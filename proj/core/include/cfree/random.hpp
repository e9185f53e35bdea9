#pragma once

#include <cstdint>
#include <random>

#include <cfree/measures.hpp>
#include <cfree/series.hpp>

namespace cfree {

/// Seeded source of small random exact inputs for the randomized checks.
class RandomInputs {
public:
    explicit RandomInputs(std::uint64_t seed) : engine_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

    /// p/q with |p| <= 5, 1 <= q <= 4.
    mpq_class rational()
    {
        mpq_class q(integer(-5, 5), integer(1, 4));
        q.canonicalize();
        return q;
    }

    mpq_class nonzero_rational()
    {
        mpq_class q;
        do {
            q = rational();
        } while (q == 0);
        return q;
    }

    /// Real half of the time, otherwise a Gaussian rational.
    ComplexRational complex_rational()
    {
        return integer(0, 1) == 0 ? ComplexRational(rational()) : ComplexRational(rational(), rational());
    }

    ComplexRational nonzero_complex_rational()
    {
        ComplexRational z;
        do {
            z = complex_rational();
        } while (z == ComplexRational(0));
        return z;
    }

    /// Zero constant term, nonzero linear coefficient.
    Series<ComplexRational> series(std::size_t order)
    {
        Series<ComplexRational> s(order);
        if (order >= 1) {
            s.set(1, nonzero_complex_rational());
        }
        for (std::size_t i = 2; i <= order; ++i) {
            s.set(i, complex_rational());
        }
        return s;
    }

    /// Nonzero constant term; for T-type series.
    Series<ComplexRational> unit_series(std::size_t order)
    {
        Series<ComplexRational> s(order);
        s.set(0, nonzero_complex_rational());
        for (std::size_t i = 1; i <= order; ++i) {
            s.set(i, complex_rational());
        }
        return s;
    }

    /// Atomic probability measure with up to `max_atoms` atoms. Angles are
    /// multiples of 1/denominator turns; weights are positive rationals.
    Atomic atomic(int max_atoms, int denominator)
    {
        const int k = integer(1, max_atoms);
        std::vector<Atom> atoms;
        mpq_class total = 0;
        for (int i = 0; i < k; ++i) {
            mpq_class w(integer(1, 6));
            total += w;
            atoms.push_back(Atom{mpq_class(integer(0, denominator - 1), denominator), w});
        }
        for (auto &a : atoms) {
            a.weight /= total;
            a.turns.canonicalize();
        }
        return make_atomic(std::move(atoms));
    }

    /// Atomic measure whose first moment stays away from zero: one atom at
    /// angle 0 carries more than half of the mass.
    Atomic atomic_nonzero_mean(int max_atoms, int denominator)
    {
        Atomic a = atomic(max_atoms, denominator);
        for (auto &atom : a.atoms) {
            atom.weight /= 3;
        }
        a.atoms.push_back(Atom{0, mpq_class(2, 3)});
        return make_atomic(std::move(a.atoms));
    }

    std::mt19937_64 &engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

} // namespace cfree
