/*
   Copyright 2026 The krs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "support/brute.hpp"

#include <set>

namespace krs::testing {

namespace {

using IntMatrix = std::vector<Ints>;

IntMatrix to_ints(const Matrix& m) {
    IntMatrix out(m.rows(), Ints(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    }
    return out;
}

IntMatrix product(const IntMatrix& a, const IntMatrix& b, std::int64_t p) {
    const std::size_t n = a.size(), k = b.size(), m = k == 0 ? 0 : b[0].size();
    IntMatrix out(n, Ints(m, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            std::int64_t s = 0;
            for (std::size_t l = 0; l < k; ++l) s = (s + a[i][l] * b[l][j]) % p;
            out[i][j] = s;
        }
    }
    return out;
}

bool next_vector(Ints& v, std::int64_t p) {
    for (auto& c : v) {
        if (++c < p) return true;
        c = 0;
    }
    return false;
}

bool poly_divides(const Ints& d, Ints f, std::int64_t p) {
    // d monic; long division on plain integers.
    const std::size_t dd = d.size() - 1;
    while (f.size() > dd) {
        const std::int64_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dd;
        for (std::size_t i = 0; i <= dd; ++i) f[shift + i] = ((f[shift + i] - lead * d[i]) % p + p) % p;
        f.pop_back();
    }
    for (auto c : f) {
        if (c != 0) return false;
    }
    return true;
}

}  // namespace

std::int64_t brute_inverse(std::int64_t a, std::int64_t p) {
    for (std::int64_t b = 1; b < p; ++b) {
        if ((a % p) * b % p == 1) return b;
    }
    return 0;
}

Ints brute_multiply(const StructureAlgebra& a, const Ints& x, const Ints& y) {
    const std::size_t n = a.dim();
    const std::int64_t p = a.field().characteristic();
    Ints out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) out[k] = (out[k] + x[i] * y[j] % p * a.constant(i, j, k)) % p;
        }
    }
    return out;
}

std::vector<Ints> brute_idempotents(const StructureAlgebra& a) {
    std::vector<Ints> out;
    Ints x(a.dim(), 0);
    do {
        if (brute_multiply(a, x, x) == x) out.push_back(x);
    } while (next_vector(x, a.field().characteristic()));
    return out;
}

bool annihilates(const Polynomial& f, const Matrix& m) {
    const std::int64_t p = m.field().characteristic();
    const IntMatrix a = to_ints(m);
    const std::size_t n = a.size();
    IntMatrix power(n, Ints(n, 0));
    for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
    IntMatrix sum(n, Ints(n, 0));
    for (int d = 0; d <= f.degree(); ++d) {
        const std::int64_t c = f.coefficient(static_cast<std::size_t>(d));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) sum[i][j] = (sum[i][j] + c * power[i][j]) % p;
        }
        power = product(power, a, p);
    }
    for (const auto& row : sum) {
        for (auto c : row) {
            if (c != 0) return false;
        }
    }
    return true;
}

Polynomial brute_min_poly(const Matrix& m) {
    const auto& field = m.field();
    for (std::size_t d = 0;; ++d) {
        Ints low(d, 0);
        do {
            std::vector<std::int64_t> coeffs(low.begin(), low.end());
            coeffs.push_back(1);
            Polynomial f(field, coeffs);
            if (annihilates(f, m)) return f;
        } while (next_vector(low, field.characteristic()));
    }
}

bool brute_irreducible(const Polynomial& f) {
    const std::int64_t p = f.field().characteristic();
    Ints fi;
    for (int i = 0; i <= f.degree(); ++i) fi.push_back(f.coefficient(static_cast<std::size_t>(i)));
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        Ints low(static_cast<std::size_t>(d), 0);
        do {
            Ints divisor = low;
            divisor.push_back(1);
            if (poly_divides(divisor, fi, p)) return false;
        } while (next_vector(low, p));
    }
    return f.degree() >= 1;
}

std::size_t brute_rank(const Matrix& m) {
    const std::int64_t p = m.field().characteristic();
    const IntMatrix a = to_ints(m);
    std::set<Ints> span;
    Ints coeffs(a.size(), 0);
    do {
        Ints v(m.cols(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) v[j] = (v[j] + coeffs[i] * a[i][j]) % p;
        }
        span.insert(v);
    } while (next_vector(coeffs, p));
    std::size_t r = 0;
    for (std::size_t size = 1; size < span.size(); size *= static_cast<std::size_t>(p)) ++r;
    return r;
}

}  // namespace krs::testing
