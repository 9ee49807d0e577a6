// Copyright 2026 The bosim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bosim/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace bosim {

namespace {

struct Neumaier {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + comp; }
};

struct ComplexNeumaier {
    Neumaier re, im;
    void add(double r, double i) {
        re.add(r);
        im.add(i);
    }
    cplx value() const { return {re.value(), im.value()}; }
};

void check_square(const CMatrix &a, size_t limit, const char *kernel) {
    if (!a.is_square()) {
        throw std::invalid_argument(std::string(kernel) + ": matrix must be square");
    }
    if (a.rows() > limit) {
        throw std::invalid_argument(std::string(kernel) + ": order " + std::to_string(a.rows()) +
                                    " exceeds limit " + std::to_string(limit));
    }
}

/// Split-complex copy of a matrix, column-major so one column update is a
/// contiguous sweep.
struct SplitColumns {
    size_t n;
    std::vector<double> re, im;

    explicit SplitColumns(const CMatrix &a) : n(a.rows()), re(a.rows() * a.cols()), im(a.rows() * a.cols()) {
        for (size_t c = 0; c < a.cols(); c++) {
            for (size_t r = 0; r < a.rows(); r++) {
                re[c * n + r] = a(r, c).real();
                im[c * n + r] = a(r, c).imag();
            }
        }
    }
    const double *col_re(size_t c) const { return re.data() + c * n; }
    const double *col_im(size_t c) const { return im.data() + c * n; }
};

inline void row_product(const double *re, const double *im, size_t n, double &out_re, double &out_im) {
    // Two interleaved partial products shorten the multiply dependency chain.
    double a_re = 1.0, a_im = 0.0, b_re = 1.0, b_im = 0.0;
    size_t i = 0;
    for (; i + 1 < n; i += 2) {
        const double t_re = a_re * re[i] - a_im * im[i];
        a_im = a_re * im[i] + a_im * re[i];
        a_re = t_re;
        const double u_re = b_re * re[i + 1] - b_im * im[i + 1];
        b_im = b_re * im[i + 1] + b_im * re[i + 1];
        b_re = u_re;
    }
    if (i < n) {
        const double t_re = a_re * re[i] - a_im * im[i];
        a_im = a_re * im[i] + a_im * re[i];
        a_re = t_re;
    }
    out_re = a_re * b_re - a_im * b_im;
    out_im = a_re * b_im + a_im * b_re;
}

/// Fixed chunk count per order so the reduction tree never depends on the
/// worker count.
uint64_t chunk_count(uint64_t total, size_t n) {
    if (n < 12) {
        return 1;
    }
    return std::min<uint64_t>(total, 256);
}

template <typename ChunkFn>
cplx reduce_chunks(uint64_t total, size_t n, unsigned workers, ChunkFn &&chunk) {
    const uint64_t chunks = chunk_count(total, n);
    std::vector<ComplexNeumaier> partial(chunks);
    auto run = [&](uint64_t c) {
        const uint64_t lo = total * c / chunks;
        const uint64_t hi = total * (c + 1) / chunks;
        partial[c] = chunk(lo, hi);
    };
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    const uint64_t used = std::min<uint64_t>(workers, chunks);
    if (used <= 1) {
        for (uint64_t c = 0; c < chunks; c++) {
            run(c);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(used);
        for (uint64_t w = 0; w < used; w++) {
            pool.emplace_back([&, w] {
                for (uint64_t c = w; c < chunks; c += used) {
                    run(c);
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    ComplexNeumaier total_sum;
    for (const auto &p : partial) {
        const cplx v = p.value();
        total_sum.add(v.real(), v.imag());
    }
    return total_sum.value();
}

}  // namespace

cplx perm_naive(const CMatrix &a) {
    check_square(a, kMaxNaiveOrder, "perm_naive");
    const size_t n = a.rows();
    if (n == 0) {
        return 1.0;
    }
    std::vector<size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    cplx total = 0.0;
    do {
        cplx term = 1.0;
        for (size_t k = 0; k < n; k++) {
            term *= a(k, sigma[k]);
        }
        total += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

cplx perm_ryser(const CMatrix &a, unsigned workers) {
    check_square(a, kMaxPermanentOrder, "perm_ryser");
    const size_t n = a.rows();
    if (n == 0) {
        return 1.0;
    }
    const SplitColumns cols(a);
    // Index 0 is the empty subset, whose row-sum product vanishes for n >= 1.
    const uint64_t total = (uint64_t{1} << n) - 1;

    auto chunk = [&](uint64_t lo, uint64_t hi) {
        ComplexNeumaier acc;
        std::vector<double> rs_re(n, 0.0), rs_im(n, 0.0);
        uint64_t k = lo + 1;
        const uint64_t end = hi + 1;
        uint64_t gray = k ^ (k >> 1);
        for (size_t j = 0; j < n; j++) {
            if (gray >> j & 1U) {
                const double *cr = cols.col_re(j);
                const double *ci = cols.col_im(j);
                for (size_t i = 0; i < n; i++) {
                    rs_re[i] += cr[i];
                    rs_im[i] += ci[i];
                }
            }
        }
        // Sign (-1)^(n - |S|).
        double sign = ((n - static_cast<size_t>(std::popcount(gray))) & 1U) ? -1.0 : 1.0;
        double p_re, p_im;
        row_product(rs_re.data(), rs_im.data(), n, p_re, p_im);
        acc.add(sign * p_re, sign * p_im);
        for (k = k + 1; k < end; k++) {
            const int j = std::countr_zero(k);
            gray ^= uint64_t{1} << j;
            const double *cr = cols.col_re(static_cast<size_t>(j));
            const double *ci = cols.col_im(static_cast<size_t>(j));
            if (gray >> j & 1U) {
                for (size_t i = 0; i < n; i++) {
                    rs_re[i] += cr[i];
                    rs_im[i] += ci[i];
                }
            } else {
                for (size_t i = 0; i < n; i++) {
                    rs_re[i] -= cr[i];
                    rs_im[i] -= ci[i];
                }
            }
            sign = -sign;
            row_product(rs_re.data(), rs_im.data(), n, p_re, p_im);
            acc.add(sign * p_re, sign * p_im);
        }
        return acc;
    };
    return reduce_chunks(total, n, workers, chunk);
}

cplx perm_glynn(const CMatrix &a, unsigned workers) {
    check_square(a, kMaxPermanentOrder, "perm_glynn");
    const size_t n = a.rows();
    if (n == 0) {
        return 1.0;
    }
    const SplitColumns cols(a);
    // Sign vectors over columns 1..n-1; column 0 keeps delta = +1.
    const uint64_t total = uint64_t{1} << (n - 1);

    auto chunk = [&](uint64_t lo, uint64_t hi) {
        ComplexNeumaier acc;
        std::vector<double> rs_re(n, 0.0), rs_im(n, 0.0);
        uint64_t gray = lo ^ (lo >> 1);
        for (size_t j = 0; j < n; j++) {
            const double s = (j > 0 && (gray >> (j - 1) & 1U)) ? -1.0 : 1.0;
            const double *cr = cols.col_re(j);
            const double *ci = cols.col_im(j);
            for (size_t i = 0; i < n; i++) {
                rs_re[i] += s * cr[i];
                rs_im[i] += s * ci[i];
            }
        }
        double sign = (std::popcount(gray) & 1) ? -1.0 : 1.0;
        double p_re, p_im;
        row_product(rs_re.data(), rs_im.data(), n, p_re, p_im);
        acc.add(sign * p_re, sign * p_im);
        for (uint64_t k = lo + 1; k < hi; k++) {
            const int j = std::countr_zero(k);
            gray ^= uint64_t{1} << j;
            const double *cr = cols.col_re(static_cast<size_t>(j) + 1);
            const double *ci = cols.col_im(static_cast<size_t>(j) + 1);
            if (gray >> j & 1U) {
                for (size_t i = 0; i < n; i++) {
                    rs_re[i] -= 2.0 * cr[i];
                    rs_im[i] -= 2.0 * ci[i];
                }
            } else {
                for (size_t i = 0; i < n; i++) {
                    rs_re[i] += 2.0 * cr[i];
                    rs_im[i] += 2.0 * ci[i];
                }
            }
            sign = -sign;
            row_product(rs_re.data(), rs_im.data(), n, p_re, p_im);
            acc.add(sign * p_re, sign * p_im);
        }
        return acc;
    };
    return reduce_chunks(total, n, workers, chunk) * std::ldexp(1.0, -static_cast<int>(n - 1));
}

std::vector<cplx> column_minor_permanents(const CMatrix &b) {
    const size_t r = b.rows();
    const size_t c = r + 1;
    if (b.cols() != c) {
        throw std::invalid_argument("column_minor_permanents: expected an r x (r+1) matrix");
    }
    if (r > kMaxPermanentOrder) {
        throw std::invalid_argument("column_minor_permanents: order exceeds limit");
    }
    if (r == 0) {
        return {cplx(1.0)};
    }
    const SplitColumns cols(b);
    std::vector<double> rs_re(r, 0.0), rs_im(r, 0.0);
    // delta[l] as +-1 doubles so the accumulation loop is branch-free.
    std::vector<double> delta(c, 1.0);
    std::vector<double> acc_re(c, 0.0), acc_im(c, 0.0);
    for (size_t j = 0; j < c; j++) {
        const double *cr = cols.col_re(j);
        const double *ci = cols.col_im(j);
        for (size_t i = 0; i < r; i++) {
            rs_re[i] += cr[i];
            rs_im[i] += ci[i];
        }
    }
    const uint64_t total = uint64_t{1} << r;
    uint64_t gray = 0;
    double sign = 1.0;
    for (uint64_t k = 0; k < total; k++) {
        if (k > 0) {
            const int j = std::countr_zero(k);
            gray ^= uint64_t{1} << j;
            const size_t col = static_cast<size_t>(j) + 1;
            const double *cr = cols.col_re(col);
            const double *ci = cols.col_im(col);
            const double step = (gray >> j & 1U) ? -2.0 : 2.0;
            for (size_t i = 0; i < r; i++) {
                rs_re[i] += step * cr[i];
                rs_im[i] += step * ci[i];
            }
            delta[col] = -delta[col];
            sign = -sign;
        }
        double p_re, p_im;
        row_product(rs_re.data(), rs_im.data(), r, p_re, p_im);
        p_re *= sign;
        p_im *= sign;
        for (size_t l = 0; l < c; l++) {
            acc_re[l] += delta[l] * p_re;
            acc_im[l] += delta[l] * p_im;
        }
    }
    const double scale = std::ldexp(1.0, -static_cast<int>(r));
    std::vector<cplx> result(c);
    for (size_t l = 0; l < c; l++) {
        result[l] = cplx(acc_re[l] * scale, acc_im[l] * scale);
    }
    return result;
}

}  // namespace bosim
