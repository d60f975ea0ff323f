#include "macgreen/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace macgreen {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

long long mod_norm(long long a, long long p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

long long mod_pow(long long base, long long exp, long long p) {
    long long result = 1 % p;
    base = mod_norm(base, p);
    while (exp > 0) {
        if (exp & 1) result = (result * base) % p;
        base = (base * base) % p;
        exp >>= 1;
    }
    return result;
}

long long mod_inv(long long a, long long p) { return mod_pow(a, p - 2, p); }

}  // namespace

FieldSpec FieldSpec::prime(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be 0 or a prime");
    return {p};
}

std::string FieldSpec::to_string() const {
    return characteristic == 0 ? "Q" : "F_" + std::to_string(characteristic);
}

int Monomial::degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > other.exps[i]) return false;
    return true;
}

Monomial Monomial::times_var(int v) const {
    Monomial m = *this;
    ++m.exps[v];
    return m;
}

Monomial Monomial::div_var(int v) const {
    Monomial m = *this;
    --m.exps[v];
    return m;
}

namespace {

std::string monomial_text(const Monomial& m, int nvars) {
    static const char* short_names[4] = {"x", "y", "z", "w"};
    std::ostringstream os;
    bool first = true;
    for (int v = 0; v < nvars; ++v) {
        if (m.exps[v] == 0) continue;
        if (!first) os << "*";
        first = false;
        if (nvars <= 4)
            os << short_names[v];
        else
            os << "x" << (v + 1);
        if (m.exps[v] > 1) os << "^" << m.exps[v];
    }
    if (first) os << "1";
    return os.str();
}

}  // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("ideal needs at least one variable");
    for (const auto& g : gens)
        if (static_cast<int>(g.exps.size()) != nvars)
            throw std::invalid_argument("generator has wrong variable count");
    // Keep only divisibility-minimal generators, x-first for display.
    std::sort(gens.begin(), gens.end(), std::greater<>());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && gens[j].divides(gens[i])) redundant = true;
        if (!redundant) minimal.push_back(gens[i]);
    }
    gens_ = std::move(minimal);
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::is_artinian() const {
    for (int v = 0; v < nvars_; ++v) {
        bool pure_power = false;
        for (const auto& g : gens_) {
            bool pure = g.exps[v] > 0;
            for (int u = 0; u < nvars_ && pure; ++u)
                if (u != v && g.exps[u] > 0) pure = false;
            if (pure) {
                pure_power = true;
                break;
            }
        }
        if (!pure_power) return false;
    }
    return true;
}

MonomialIdeal MonomialIdeal::plus_variable(int v) const {
    std::vector<Monomial> gens = gens_;
    Monomial xv{std::vector<int>(nvars_, 0)};
    xv.exps[v] = 1;
    gens.push_back(xv);
    return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon_variable(int v) const {
    std::vector<Monomial> gens;
    for (const auto& g : gens_) {
        Monomial q = g;
        if (q.exps[v] > 0) --q.exps[v];
        gens.push_back(q);
    }
    return MonomialIdeal(nvars_, std::move(gens));
}

std::string MonomialIdeal::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << monomial_text(gens_[i], nvars_);
    }
    os << ")";
    return os.str();
}

MonomialIdeal parse_ideal(const std::string& text, int nvars) {
    if (nvars < 1 || nvars > 64) throw std::invalid_argument("variable count out of range");
    std::vector<Monomial> gens;
    std::istringstream in(text);
    std::string term;
    while (std::getline(in, term, ',')) {
        Monomial m{std::vector<int>(nvars, 0)};
        std::size_t i = 0;
        bool any_factor = false;
        auto skip_ws = [&] {
            while (i < term.size() && std::isspace(static_cast<unsigned char>(term[i]))) ++i;
        };
        skip_ws();
        while (i < term.size()) {
            char c = term[i];
            int var = -1;
            if (c == 'x' && i + 1 < term.size() && std::isdigit(static_cast<unsigned char>(term[i + 1]))) {
                std::size_t j = i + 1;
                long long idx = 0;
                while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j])))
                    idx = idx * 10 + (term[j++] - '0');
                if (idx < 1 || idx > nvars)
                    throw std::invalid_argument("variable x" + std::to_string(idx) +
                                                " out of range for " + std::to_string(nvars) + " variables");
                var = static_cast<int>(idx) - 1;
                i = j;
            } else if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
                var = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : 3;
                if (var >= nvars)
                    throw std::invalid_argument(std::string("variable '") + c + "' out of range for " +
                                                std::to_string(nvars) + " variables");
                ++i;
            } else {
                throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                            "' in monomial '" + term + "'");
            }
            int exp = 1;
            skip_ws();
            if (i < term.size() && term[i] == '^') {
                ++i;
                skip_ws();
                std::size_t start = i;
                while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
                if (start == i) throw std::invalid_argument("missing exponent in '" + term + "'");
                exp = std::stoi(term.substr(start, i - start));
                if (exp < 1) throw std::invalid_argument("exponent must be positive");
            }
            m.exps[var] += exp;
            any_factor = true;
            skip_ws();
            if (i < term.size() && term[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        if (!any_factor) throw std::invalid_argument("empty monomial in ideal description");
        gens.push_back(std::move(m));
    }
    if (gens.empty()) throw std::invalid_argument("ideal description is empty");
    return MonomialIdeal(nvars, std::move(gens));
}

QuotientAlgebra::QuotientAlgebra(MonomialIdeal ideal, FieldSpec field, int degree_cap)
    : ideal_(std::move(ideal)), field_(field), cap_(degree_cap) {
    if (field_.characteristic != 0 && !is_prime(field_.characteristic))
        throw std::invalid_argument("field characteristic must be 0 or a prime");
    if (cap_ < 1) throw std::invalid_argument("degree cap must be positive");
}

namespace {

void enumerate_monomials(int nvars, int degree, std::vector<int>& partial,
                         const std::function<void(const Monomial&)>& sink) {
    // Descending lex: the first variable takes the largest exponent first.
    int v = static_cast<int>(partial.size());
    if (v == nvars - 1) {
        partial.push_back(degree);
        sink(Monomial{partial});
        partial.pop_back();
        return;
    }
    for (int e = degree; e >= 0; --e) {
        partial.push_back(e);
        enumerate_monomials(nvars, degree - e, partial, sink);
        partial.pop_back();
    }
}

}  // namespace

std::vector<Monomial> QuotientAlgebra::standard_monomials(int d) const {
    std::vector<Monomial> result;
    std::vector<int> partial;
    enumerate_monomials(nvars(), d, partial, [&](const Monomial& m) {
        if (!ideal_.contains(m)) result.push_back(m);
    });
    return result;
}

HilbertResult QuotientAlgebra::hilbert_function() const {
    HilbertResult res;
    const bool artinian = ideal_.is_artinian();
    for (int d = 0;; ++d) {
        long long count = static_cast<long long>(standard_monomials(d).size());
        if (count == 0) {
            res.artinian = true;
            break;
        }
        res.h.push_back(count);
        if (!artinian && d >= cap_) {
            res.artinian = false;
            break;
        }
        if (d > 4096) throw std::logic_error("hilbert_function: runaway degree loop");
    }
    return res;
}

std::vector<long long> QuotientAlgebra::socle_vector() const {
    HilbertResult hil = hilbert_function();
    if (!hil.artinian) throw std::invalid_argument("socle_vector requires an artinian quotient");
    std::vector<long long> s(hil.h.size(), 0);
    for (std::size_t d = 0; d < hil.h.size(); ++d) {
        for (const auto& u : standard_monomials(static_cast<int>(d))) {
            bool socle = true;
            for (int v = 0; v < nvars() && socle; ++v)
                if (!ideal_.contains(u.times_var(v))) socle = false;
            if (socle) ++s[d];
        }
    }
    return s;
}

std::string LinearForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t v = 0; v < coeffs.size(); ++v) {
        if (coeffs[v] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs[v] << "*";
        if (coeffs.size() <= 4)
            os << (v == 0 ? "x" : v == 1 ? "y" : v == 2 ? "z" : "w");
        else
            os << "x" << (v + 1);
    }
    if (first) os << "0";
    return os.str();
}

LinearForm random_linear_form(int nvars, const FieldSpec& field, std::mt19937_64& gen) {
    // Hand-rolled draws: identical streams on every platform for a fixed seed.
    LinearForm L;
    L.coeffs.assign(nvars, 0);
    const long long range = 1000000;
    for (;;) {
        bool nonzero = false;
        for (int v = 0; v < nvars; ++v) {
            long long c;
            if (field.characteristic == 0)
                c = static_cast<long long>(gen() % (2 * range + 1)) - range;
            else
                c = static_cast<long long>(gen() % field.characteristic);
            L.coeffs[v] = c;
            if (c != 0) nonzero = true;
        }
        if (nonzero) return L;
    }
}

long long rank_modp(std::vector<std::vector<long long>> M, long long p) {
    if (M.empty() || M[0].empty()) return 0;
    const std::size_t rows = M.size(), cols = M[0].size();
    for (auto& row : M)
        for (auto& x : row) x = mod_norm(x, p);
    std::size_t pr = 0;
    long long rank = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t pivot = pr;
        while (pivot < rows && M[pivot][pc] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(M[pr], M[pivot]);
        const long long inv = mod_inv(M[pr][pc], p);
        for (std::size_t i = pr + 1; i < rows; ++i) {
            if (M[i][pc] == 0) continue;
            const long long f = (M[i][pc] * inv) % p;
            for (std::size_t j = pc; j < cols; ++j)
                M[i][j] = mod_norm(M[i][j] - f * M[pr][j] % p, p);
        }
        ++pr;
        ++rank;
    }
    return rank;
}

long long rank_char0(std::vector<std::vector<long long>> M) {
    if (M.empty() || M[0].empty()) return 0;
    const std::size_t rows = M.size(), cols = M[0].size();
    const long long full = static_cast<long long>(std::min(rows, cols));
    // A prime-field rank never exceeds the rational rank, so a full
    // modular rank already certifies the answer exactly.
    const long long kProbePrime = 2147483629LL;
    if (rank_modp(M, kProbePrime) == full) return full;
    // Fraction-free (Bareiss) elimination on arbitrary-precision integers.
    std::vector<std::vector<BigInt>> A(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) A[i][j] = M[i][j];
    BigInt prev = 1;
    std::size_t pr = 0;
    long long rank = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t pivot = pr;
        while (pivot < rows && A[pivot][pc] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(A[pr], A[pivot]);
        for (std::size_t i = pr + 1; i < rows; ++i) {
            for (std::size_t j = pc + 1; j < cols; ++j) {
                A[i][j] = A[pr][pc] * A[i][j] - A[i][pc] * A[pr][j];
                A[i][j] /= prev;  // exact by the Bareiss identity
            }
            A[i][pc] = 0;
        }
        prev = A[pr][pc];
        ++pr;
        ++rank;
    }
    return rank;
}

namespace {

/// Matrix of .L : A_d -> A_{d+1} in the standard-monomial bases.
std::vector<std::vector<long long>> multiplication_matrix(const QuotientAlgebra& A,
                                                          const LinearForm& L, int d) {
    const auto source = A.standard_monomials(d);
    const auto target = A.standard_monomials(d + 1);
    std::map<Monomial, std::size_t> index;
    for (std::size_t j = 0; j < target.size(); ++j) index[target[j]] = j;
    std::vector<std::vector<long long>> M(source.size(),
                                          std::vector<long long>(target.size(), 0));
    const long long p = A.field().characteristic;
    for (std::size_t i = 0; i < source.size(); ++i) {
        for (int v = 0; v < A.nvars(); ++v) {
            if (L.coeffs[v] == 0) continue;
            Monomial w = source[i].times_var(v);
            auto it = index.find(w);
            if (it == index.end()) continue;  // lands in the ideal
            M[i][it->second] = p == 0 ? L.coeffs[v] : mod_norm(L.coeffs[v], p);
        }
    }
    return M;
}

}  // namespace

long long multiplication_rank(const QuotientAlgebra& A, const LinearForm& L, int d) {
    if (static_cast<int>(L.coeffs.size()) != A.nvars())
        throw std::invalid_argument("linear form has wrong variable count");
    auto M = multiplication_matrix(A, L, d);
    if (M.empty() || M[0].empty()) return 0;
    return A.field().characteristic == 0 ? rank_char0(std::move(M))
                                         : rank_modp(std::move(M), A.field().characteristic);
}

long long restriction_dimension(const QuotientAlgebra& A, const LinearForm& L, int d) {
    if (d < 1) throw std::invalid_argument("restriction_dimension requires d >= 1");
    const long long hd = static_cast<long long>(A.standard_monomials(d).size());
    return hd - multiplication_rank(A, L, d - 1);
}

namespace {

/// All nonzero forms over F_p up to scalar: first nonzero coefficient 1.
std::vector<LinearForm> all_projective_forms(int nvars, long long p) {
    std::vector<LinearForm> forms;
    std::vector<long long> c(nvars, 0);
    for (int lead = 0; lead < nvars; ++lead) {
        std::fill(c.begin(), c.end(), 0);
        c[lead] = 1;
        // iterate coefficients after the leading one over all of F_p
        std::vector<long long> tail(nvars - lead - 1, 0);
        for (;;) {
            for (int j = 0; j < static_cast<int>(tail.size()); ++j) c[lead + 1 + j] = tail[j];
            forms.push_back(LinearForm{c});
            int k = static_cast<int>(tail.size()) - 1;
            while (k >= 0 && tail[k] == p - 1) tail[k--] = 0;
            if (k < 0) break;
            ++tail[k];
        }
    }
    return forms;
}

}  // namespace

WlpResult wlp_test(const QuotientAlgebra& A, int trials, unsigned long long seed) {
    HilbertResult hil = A.hilbert_function();
    if (!hil.artinian) throw std::invalid_argument("wlp_test requires an artinian quotient");
    const auto& h = hil.h;
    const int e = static_cast<int>(h.size()) - 1;

    WlpResult res;
    std::vector<LinearForm> candidates;
    const long long p = A.field().characteristic;
    if (p > 0) {
        BigInt count = (boost::multiprecision::pow(BigInt(p), A.nvars()) - 1) / (p - 1);
        if (count <= 2048) {
            candidates = all_projective_forms(A.nvars(), p);
            res.exhaustive = true;
        }
    }
    if (!res.exhaustive) {
        candidates.push_back(LinearForm{std::vector<long long>(A.nvars(), 1)});
        std::mt19937_64 gen(seed);
        for (int t = 0; t < trials; ++t)
            candidates.push_back(random_linear_form(A.nvars(), A.field(), gen));
    }

    long long best_total = -1;
    for (const auto& L : candidates) {
        ++res.candidates_tested;
        std::vector<DegreeRank> ranks;
        bool maximal = true;
        long long total = 0;
        for (int i = 0; i < e; ++i) {
            DegreeRank dr;
            dr.source_degree = i;
            dr.required = std::min(h[i], h[i + 1]);
            dr.achieved = multiplication_rank(A, L, i);
            total += dr.achieved;
            if (dr.achieved < dr.required) maximal = false;
            ranks.push_back(dr);
        }
        if (maximal) {
            res.has_wlp = true;
            res.witness = L;
            res.best_ranks = std::move(ranks);
            return res;
        }
        if (total > best_total) {
            best_total = total;
            res.best_ranks = std::move(ranks);
            res.witness = L;
        }
    }
    res.has_wlp = false;
    return res;
}

namespace {

/// First n degree-d monomials in r variables in ascending lex order
/// (x_1 > x_2 > ... > x_r, so the smallest give x_1 the least exponent).
void first_lex_monomials(int r, int d, long long n, std::vector<int>& partial,
                         std::vector<Monomial>& out) {
    if (static_cast<long long>(out.size()) >= n) return;
    int v = static_cast<int>(partial.size());
    if (v == r - 1) {
        partial.push_back(d);
        out.push_back(Monomial{partial});
        partial.pop_back();
        return;
    }
    for (int e = 0; e <= d && static_cast<long long>(out.size()) < n; ++e) {
        partial.push_back(e);
        first_lex_monomials(r, d - e, n, partial, out);
        partial.pop_back();
    }
}

}  // namespace

namespace {

// Sparse (variable, exponent) encoding; cheap to compare even with
// hundreds of ambient variables.
using SparseMono = std::vector<std::pair<int, int>>;

SparseMono to_sparse(const Monomial& m) {
    SparseMono s;
    for (int v = 0; v < static_cast<int>(m.exps.size()); ++v)
        if (m.exps[v] > 0) s.emplace_back(v, m.exps[v]);
    return s;
}

SparseMono sparse_times_var(const SparseMono& s, int v) {
    SparseMono out = s;
    auto it = std::lower_bound(out.begin(), out.end(), std::make_pair(v, 0));
    if (it != out.end() && it->first == v)
        ++it->second;
    else
        out.insert(it, {v, 1});
    return out;
}

SparseMono sparse_div(const SparseMono& s, std::size_t pos) {
    SparseMono out = s;
    if (out[pos].second > 1)
        --out[pos].second;
    else
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
    return out;
}

}  // namespace

long long lex_growth(const BigInt& n, int d, int r) {
    if (n < 1 || d < 1 || r < 1) throw std::invalid_argument("lex_growth: positive arguments required");
    if (n > binom(BigInt(d) + r - 1, d))
        throw std::invalid_argument("lex_growth: n exceeds the degree-d monomial count");
    const long long nn = static_cast<long long>(n);
    std::vector<Monomial> smallest;
    std::vector<int> partial;
    first_lex_monomials(r, d, nn, partial, smallest);
    std::set<SparseMono> S;
    for (const auto& s : smallest) S.insert(to_sparse(s));

    // Candidates are exactly the products of standard monomials with a
    // variable; anything else has a quotient outside S already.
    std::set<SparseMono> candidates;
    for (const auto& s : S)
        for (int v = 0; v < r; ++v) candidates.insert(sparse_times_var(s, v));
    long long count = 0;
    for (const auto& m : candidates) {
        bool ok = true;
        for (std::size_t pos = 0; pos < m.size() && ok; ++pos)
            if (!S.count(sparse_div(m, pos))) ok = false;
        if (ok) ++count;
    }
    return count;
}

namespace {

using Poly = std::map<std::vector<int>, long long>;  // exponent vector -> coeff mod p

Poly poly_scale_shift(const Poly& g, const std::vector<int>& shift, long long p) {
    Poly out;
    for (const auto& [mono, coeff] : g) {
        std::vector<int> e = mono;
        for (std::size_t v = 0; v < e.size(); ++v) e[v] += shift[v];
        out[e] = mod_norm(coeff, p);
    }
    return out;
}

/// Substitutes x_k = -(sum_{j != k} c_j x_j) / c_k and drops variable k.
/// Result lives in the remaining variables, in index order.
Poly restrict_poly(const Poly& f, const std::vector<long long>& c, int k, long long p) {
    const int nvars = static_cast<int>(c.size());
    std::vector<int> others;
    for (int v = 0; v < nvars; ++v)
        if (v != k) others.push_back(v);
    const long long inv_ck = mod_inv(mod_norm(c[k], p), p);
    Poly out;
    for (const auto& [mono, coeff] : f) {
        const int gamma = mono[k];
        // (-(sum c_j x_j)/c_k)^gamma expanded multinomially; with two
        // remaining variables this is a plain binomial expansion.
        const long long a = mod_norm(c[others[0]], p);
        const long long b = others.size() > 1 ? mod_norm(c[others[1]], p) : 0;
        const long long sign = gamma % 2 == 0 ? 1 : p - 1;
        const long long scale =
            (mod_pow(inv_ck, gamma, p) * sign) % p;
        for (int t = 0; t <= gamma; ++t) {
            long long binom_mod = static_cast<long long>(binom(gamma, t) % p);
            if (binom_mod == 0) continue;
            long long term = (((coeff % p) * scale) % p * binom_mod) % p;
            term = (term * mod_pow(a, t, p)) % p;
            term = (term * mod_pow(b, gamma - t, p)) % p;
            if (term == 0) continue;
            std::vector<int> e(others.size(), 0);
            for (std::size_t j = 0; j < others.size(); ++j) e[j] = mono[others[j]];
            e[0] += t;
            if (others.size() > 1) e[1] += gamma - t;
            out[e] = mod_norm(out[e] + term, p);
            if (out[e] == 0) out.erase(e);
        }
    }
    return out;
}

bool poly_zero(const Poly& f) {
    for (const auto& [mono, coeff] : f)
        if (coeff != 0) return false;
    return true;
}

std::vector<std::vector<long long>> span_matrix(const std::vector<Poly>& polys,
                                                const std::vector<std::vector<int>>& basis) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t j = 0; j < basis.size(); ++j) index[basis[j]] = j;
    std::vector<std::vector<long long>> M(polys.size(),
                                          std::vector<long long>(basis.size(), 0));
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (const auto& [mono, coeff] : polys[i]) M[i][index.at(mono)] = coeff;
    return M;
}

std::vector<std::vector<int>> degree_basis(int nvars, int d) {
    std::vector<std::vector<int>> basis;
    std::vector<int> partial;
    enumerate_monomials(nvars, d, partial,
                        [&](const Monomial& m) { basis.push_back(m.exps); });
    return basis;
}

std::string poly_text(const Poly& f, int nvars) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : f) {
        if (!first) os << " + ";
        first = false;
        if (coeff != 1 || Monomial{mono}.degree() == 0) os << coeff;
        if (Monomial{mono}.degree() > 0) {
            if (coeff != 1) os << "*";
            os << monomial_text(Monomial{mono}, nvars);
        }
    }
    return os.str();
}

}  // namespace

CharpReport charp_theorem4_counterexample(long long p, int d, int g_degree,
                                          unsigned long long seed, int num_forms) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (g_degree < 0 || d != p + g_degree)
        throw std::invalid_argument("need d = p + deg G with deg G >= 0");
    CharpReport rep;
    rep.p = p;
    rep.d = d;
    rep.g_degree = g_degree;
    rep.expected_codim_w = static_cast<long long>(binom(d + 2, 2)) - 3;
    rep.expected_codim_wh = d - 1;

    std::mt19937_64 gen(seed);
    const auto g_basis = degree_basis(3, g_degree);

    Poly G;
    do {
        G.clear();
        for (const auto& mono : g_basis) {
            long long c = static_cast<long long>(gen() % p);
            if (c != 0) G[mono] = c;
        }
        if (poly_zero(G)) ++rep.degenerate_resamples;
    } while (poly_zero(G));
    rep.g_text = poly_text(G, 3);

    // W = span(x^p G, y^p G, z^p G) inside the degree-d piece.
    std::vector<Poly> gens;
    for (int v = 0; v < 3; ++v) {
        std::vector<int> shift(3, 0);
        shift[v] = static_cast<int>(p);
        gens.push_back(poly_scale_shift(G, shift, p));
    }
    rep.dim_w = rank_modp(span_matrix(gens, degree_basis(3, d)), p);
    rep.codim_w = static_cast<long long>(binom(d + 2, 2)) - rep.dim_w;

    const auto restricted_basis = degree_basis(2, d);
    const FieldSpec field = FieldSpec::prime(p);
    for (int s = 0; s < num_forms; ++s) {
        LinearForm H;
        int pivot;
        for (;;) {
            H = random_linear_form(3, field, gen);
            pivot = 2;
            while (H.coeffs[pivot] == 0) --pivot;
            // Degenerate pair: G vanishes on the hyperplane, so the whole
            // restricted span collapses for reasons unrelated to Frobenius.
            if (g_degree > 0 && poly_zero(restrict_poly(G, H.coeffs, pivot, p))) {
                ++rep.degenerate_resamples;
                continue;
            }
            break;
        }
        std::vector<Poly> restricted;
        for (const auto& g : gens) restricted.push_back(restrict_poly(g, H.coeffs, pivot, p));
        const long long dim_wh = rank_modp(span_matrix(restricted, restricted_basis), p);
        rep.samples.push_back({H, static_cast<long long>(d + 1) - dim_wh});
    }
    rep.all_match = rep.codim_w == rep.expected_codim_w;
    for (const auto& s : rep.samples)
        if (s.codim_wh != rep.expected_codim_wh) rep.all_match = false;
    return rep;
}

StanleySplit stanley_split(const QuotientAlgebra& A, const LinearForm& L) {
    HilbertResult hil = A.hilbert_function();
    if (!hil.artinian) throw std::invalid_argument("stanley_split requires an artinian quotient");
    const auto& h = hil.h;
    const std::size_t len = h.size();
    StanleySplit out;
    out.b.assign(len, 0);
    out.c.assign(len, 0);

    int var = -1, nonzero = 0;
    for (std::size_t v = 0; v < L.coeffs.size(); ++v)
        if (L.coeffs[v] != 0) {
            var = static_cast<int>(v);
            ++nonzero;
        }
    if (nonzero == 0) throw std::invalid_argument("stanley_split: linear form is zero");

    if (nonzero == 1) {
        out.exact_colon = true;
        QuotientAlgebra colon(A.ideal().colon_variable(var), A.field(), A.degree_cap());
        const auto bh = colon.hilbert_function().h;
        // R/(I:L) has socle degree at most e-1, so the shift stays in range.
        for (std::size_t i = 0; i + 1 < len && i < bh.size(); ++i) out.b[i + 1] = bh[i];
        QuotientAlgebra rest(A.ideal().plus_variable(var), A.field(), A.degree_cap());
        const auto ch = rest.hilbert_function().h;
        for (std::size_t i = 0; i < len && i < ch.size(); ++i) out.c[i] = ch[i];
    } else {
        out.exact_colon = false;
        out.c[0] = 1;
        for (std::size_t i = 1; i < len; ++i)
            out.c[i] = restriction_dimension(A, L, static_cast<int>(i));
        for (std::size_t i = 0; i < len; ++i) out.b[i] = h[i] - out.c[i];
    }

    out.sums_match = true;
    for (std::size_t i = 0; i < len; ++i)
        if (out.b[i] + out.c[i] != h[i]) out.sums_match = false;
    return out;
}

}  // namespace macgreen
