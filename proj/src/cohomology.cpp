#include "catkit/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>

namespace catkit {

int CoefficientModule::size() const {
    int s = 1;
    for (int d : cyclic_orders) s *= d;
    return s;
}

std::vector<int> CoefficientModule::tuple_of(int index) const {
    std::vector<int> t(cyclic_orders.size());
    for (int i = rank() - 1; i >= 0; --i) {
        t[i] = index % cyclic_orders[i];
        index /= cyclic_orders[i];
    }
    return t;
}

int CoefficientModule::index_of(const std::vector<int>& tuple) const {
    int idx = 0;
    for (int i = 0; i < rank(); ++i) {
        int v = ((tuple[i] % cyclic_orders[i]) + cyclic_orders[i]) %
                cyclic_orders[i];
        idx = idx * cyclic_orders[i] + v;
    }
    return idx;
}

int CoefficientModule::add(int a, int b) const {
    auto ta = tuple_of(a), tb = tuple_of(b);
    for (int i = 0; i < rank(); ++i) ta[i] = (ta[i] + tb[i]) % cyclic_orders[i];
    return index_of(ta);
}

int CoefficientModule::neg(int a) const {
    auto t = tuple_of(a);
    for (int i = 0; i < rank(); ++i)
        t[i] = (cyclic_orders[i] - t[i]) % cyclic_orders[i];
    return index_of(t);
}

int CoefficientModule::scale(long long k, int a) const {
    auto t = tuple_of(a);
    for (int i = 0; i < rank(); ++i) {
        long long v = (k % cyclic_orders[i]) * t[i] % cyclic_orders[i];
        t[i] = static_cast<int>((v + cyclic_orders[i]) % cyclic_orders[i]);
    }
    return index_of(t);
}

bool CoefficientModule::action_is_trivial() const {
    for (const auto& perm : action)
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != static_cast<int>(i)) return false;
    return true;
}

namespace {

std::vector<std::vector<long long>> identity_matrix(int r) {
    std::vector<std::vector<long long>> m(r, std::vector<long long>(r, 0));
    for (int i = 0; i < r; ++i) m[i][i] = 1;
    return m;
}

std::vector<int> permutation_from_matrix(
    const CoefficientModule& m, const std::vector<std::vector<long long>>& mat) {
    const int r = m.rank();
    std::vector<int> perm(m.size());
    for (int a = 0; a < m.size(); ++a) {
        auto t = m.tuple_of(a);
        std::vector<int> img(r, 0);
        for (int j = 0; j < r; ++j) {
            long long acc = 0;
            for (int i = 0; i < r; ++i) acc += mat[j][i] * t[i];
            img[j] = static_cast<int>(((acc % m.cyclic_orders[j]) +
                                       m.cyclic_orders[j]) %
                                      m.cyclic_orders[j]);
        }
        perm[a] = m.index_of(img);
    }
    return perm;
}

} // namespace

CoefficientModule trivial_module(const FiniteGroup& g, std::vector<int> orders) {
    CoefficientModule m;
    m.cyclic_orders = std::move(orders);
    for (int d : m.cyclic_orders)
        if (d < 1) throw Error("InvalidCoefficients", "cyclic order must be >= 1");
    m.group_order = g.order;
    std::vector<int> id(m.size());
    for (int i = 0; i < m.size(); ++i) id[i] = i;
    m.action.assign(g.order, id);
    m.action_matrix.assign(g.order, identity_matrix(m.rank()));
    return m;
}

CoefficientModule module_from_matrices(
    const FiniteGroup& g, std::vector<int> orders,
    const std::vector<std::vector<std::vector<long long>>>& matrices) {
    CoefficientModule m = trivial_module(g, std::move(orders));
    if (static_cast<int>(matrices.size()) != g.order)
        throw Error("InvalidCoefficients", "need one action matrix per group element");
    const int r = m.rank();
    for (int x = 0; x < g.order; ++x) {
        const auto& mat = matrices[x];
        if (static_cast<int>(mat.size()) != r)
            throw Error("InvalidCoefficients", "action matrix has wrong shape");
        for (const auto& row : mat)
            if (static_cast<int>(row.size()) != r)
                throw Error("InvalidCoefficients", "action matrix has wrong shape");
        // well-defined on ⊕ Z/d_i: d_j | mat[j][i] * d_i
        for (int jj = 0; jj < r; ++jj)
            for (int i = 0; i < r; ++i)
                if ((mat[jj][i] * m.cyclic_orders[i]) % m.cyclic_orders[jj] != 0)
                    throw Error("InvalidCoefficients",
                                "matrix does not define an endomorphism of A");
        m.action_matrix[x] = mat;
        m.action[x] = permutation_from_matrix(m, mat);
        std::vector<bool> hit(m.size(), false);
        for (int v : m.action[x]) {
            if (hit[v])
                throw Error("InvalidCoefficients",
                            "action of element " + std::to_string(x) +
                                " is not bijective");
            hit[v] = true;
        }
    }
    if (m.action[0] != trivial_module(g, m.cyclic_orders).action[0])
        throw Error("InvalidCoefficients", "action of the identity is not trivial");
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            for (int a = 0; a < m.size(); ++a)
                if (m.act(g.mul(x, y), a) != m.act(x, m.act(y, a)))
                    throw Error("InvalidCoefficients",
                                "action is not a homomorphism at (" +
                                    std::to_string(x) + "," + std::to_string(y) +
                                    ")");
    return m;
}

FiniteGroup group_from_module(const CoefficientModule& m) {
    const int n = m.size();
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) flat[a * n + b] = m.add(a, b);
    return from_flat_table(n, std::move(flat));
}

int Cochain::at(const std::vector<int>& args) const {
    std::size_t idx = 0;
    for (int a : args) idx = idx * group_order + a;
    return values[idx];
}

bool Cochain::is_zero() const {
    for (int v : values)
        if (v != 0) return false;
    return true;
}

Cochain zero_cochain(const FiniteGroup& g, int degree) {
    Cochain c;
    c.degree = degree;
    c.group_order = g.order;
    c.values.assign(saturating_pow(g.order, degree), 0);
    return c;
}

bool is_normalized(const Cochain& c) {
    const int n = c.group_order;
    std::vector<int> args(c.degree, 0);
    for (std::size_t idx = 0; idx < c.values.size(); ++idx) {
        std::size_t rest = idx;
        bool has_identity = false;
        for (int i = c.degree - 1; i >= 0; --i) {
            args[i] = static_cast<int>(rest % n);
            rest /= n;
            if (args[i] == 0) has_identity = true;
        }
        if (has_identity && c.values[idx] != 0) return false;
    }
    return true;
}

Cochain coboundary(const FiniteGroup& g, const CoefficientModule& m,
                   const Cochain& c) {
    if (c.degree > kMaxCochainDegree)
        throw Error("DegreeTooHigh", "coboundary supports degree <= " +
                                         std::to_string(kMaxCochainDegree));
    if (g.order != c.group_order || g.order != m.group_order)
        throw Error("InvalidCoefficients", "group orders do not match");
    const int n = g.order;
    const int deg = c.degree;
    Cochain out = zero_cochain(g, deg + 1);

    std::vector<int> args(deg + 1, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == deg + 1) {
            int val = 0;
            // leading action term
            {
                std::vector<int> rest(args.begin() + 1, args.end());
                val = m.act(args[0], c.at(rest));
            }
            // inner folds
            for (int i = 1; i <= deg; ++i) {
                std::vector<int> folded;
                folded.reserve(deg);
                for (int k = 0; k < deg + 1; ++k) {
                    if (k == i - 1) {
                        folded.push_back(g.mul(args[k], args[k + 1]));
                        ++k;
                    } else {
                        folded.push_back(args[k]);
                    }
                }
                int term = c.at(folded);
                val = m.add(val, i % 2 == 1 ? m.neg(term) : term);
            }
            // trailing term
            {
                std::vector<int> head(args.begin(), args.end() - 1);
                int term = c.at(head);
                val = m.add(val, (deg + 1) % 2 == 1 ? m.neg(term) : term);
            }
            std::size_t idx = 0;
            for (int a : args) idx = idx * n + a;
            out.values[idx] = val;
            return;
        }
        for (int v = 0; v < n; ++v) {
            args[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

namespace {

// positions of the (|G|-1)^deg identity-free argument tuples
struct NormalizedIndex {
    int group_order;
    int degree;
    std::vector<int> tuples; // flat |G|^deg index of each free tuple

    explicit NormalizedIndex(int n, int deg) : group_order(n), degree(deg) {
        std::vector<int> args(deg, 1);
        std::function<void(int, std::size_t)> rec = [&](int pos, std::size_t idx) {
            if (pos == deg) {
                tuples.push_back(static_cast<int>(idx));
                return;
            }
            for (int v = 1; v < n; ++v) {
                args[pos] = v;
                rec(pos + 1, idx * n + v);
            }
        };
        if (deg == 0) {
            tuples.push_back(0);
        } else {
            rec(0, 0);
        }
    }

    int count() const { return static_cast<int>(tuples.size()); }
};

// rank of a free tuple (all entries nonzero) in base (|G|-1)
int free_tuple_rank(const std::vector<int>& args, int n) {
    int rank = 0;
    for (int a : args) rank = rank * (n - 1) + (a - 1);
    return rank;
}

// integer lift of the normalized bar differential C^deg -> C^(deg+1)
IntMatrix bar_matrix(const FiniteGroup& g, const CoefficientModule& m, int deg) {
    const int n = g.order, r = m.rank();
    NormalizedIndex rows_idx(n, deg + 1), cols_idx(n, deg);
    IntMatrix d(rows_idx.count() * r, cols_idx.count() * r);

    std::vector<int> args(deg + 1, 1);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == deg + 1) {
            int row_tuple = free_tuple_rank(args, n);
            // action term on (g_2,...)
            {
                std::vector<int> rest(args.begin() + 1, args.end());
                int col_tuple = free_tuple_rank(rest, n);
                const auto& mat = m.action_matrix[args[0]];
                for (int jj = 0; jj < r; ++jj)
                    for (int i = 0; i < r; ++i)
                        d.at(row_tuple * r + jj, col_tuple * r + i) += mat[jj][i];
            }
            for (int i = 1; i <= deg; ++i) {
                std::vector<int> folded;
                for (int k = 0; k < deg + 1; ++k) {
                    if (k == i - 1) {
                        folded.push_back(g.mul(args[k], args[k + 1]));
                        ++k;
                    } else {
                        folded.push_back(args[k]);
                    }
                }
                if (std::find(folded.begin(), folded.end(), 0) != folded.end())
                    continue; // normalized cochains vanish there
                int col_tuple = free_tuple_rank(folded, n);
                int sign = i % 2 == 1 ? -1 : 1;
                for (int jj = 0; jj < r; ++jj)
                    d.at(row_tuple * r + jj, col_tuple * r + jj) += sign;
            }
            {
                std::vector<int> head(args.begin(), args.end() - 1);
                int col_tuple = free_tuple_rank(head, n);
                int sign = (deg + 1) % 2 == 1 ? -1 : 1;
                for (int jj = 0; jj < r; ++jj)
                    d.at(row_tuple * r + jj, col_tuple * r + jj) += sign;
            }
            return;
        }
        for (int v = 1; v < n; ++v) {
            args[pos] = v;
            rec(pos + 1);
        }
    };
    if (deg + 1 > 0 && n > 1) rec(0);
    return d;
}

IntMatrix moduli_matrix(const CoefficientModule& m, int tuple_count) {
    const int r = m.rank();
    IntMatrix d(tuple_count * r, tuple_count * r);
    for (int t = 0; t < tuple_count; ++t)
        for (int i = 0; i < r; ++i)
            d.at(t * r + i, t * r + i) = m.cyclic_orders[i];
    return d;
}

std::vector<long long> combine_primary_parts(
    const std::map<long long, std::vector<int>>& lambdas) {
    std::size_t parts = 0;
    for (const auto& [p, lam] : lambdas) parts = std::max(parts, lam.size());
    std::vector<long long> factors;
    for (std::size_t j = 0; j < parts; ++j) {
        long long d = 1;
        for (const auto& [p, lam] : lambdas)
            if (j < lam.size())
                for (int i = 0; i < lam[j]; ++i) d *= p;
        if (d > 1) factors.push_back(d);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

} // namespace

CohomologyResult cohomology_group(int n, const FiniteGroup& g,
                                  const CoefficientModule& m) {
    if (n < 0 || n > kMaxCochainDegree)
        throw Error("DegreeTooHigh",
                    "cohomology supports 0 <= n <= " +
                        std::to_string(kMaxCochainDegree));
    const int r = m.rank();
    NormalizedIndex idx_n(g.order, n);
    const int dim = idx_n.count() * r;
    CohomologyResult result;
    if (dim == 0) {
        result.cocycle_count = 1;
        result.coboundary_count = 1;
        return result;
    }

    IntMatrix d_n = bar_matrix(g, m, n);
    NormalizedIndex idx_up(g.order, n + 1);
    const int dim_up = idx_up.count() * r;

    BigInt full = 1;
    IntMatrix diag_n = moduli_matrix(m, idx_n.count());
    for (int i = 0; i < dim; ++i) full *= diag_n.at(i, i);

    // cocycle lattice: x with d_n x = 0 modulo the upstairs moduli
    IntMatrix z_basis;
    if (dim_up == 0) {
        z_basis = IntMatrix::identity(dim);
    } else {
        IntMatrix stacked(dim_up, dim + dim_up);
        for (int i = 0; i < dim_up; ++i) {
            for (int j = 0; j < dim; ++j) stacked.at(i, j) = d_n.at(i, j);
            stacked.at(i, dim + i) = m.cyclic_orders[i % r];
        }
        IntMatrix kernel = kernel_basis(stacked);
        IntMatrix projected(dim, kernel.cols);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < kernel.cols; ++j)
                projected.at(i, j) = kernel.at(i, j);
        z_basis = column_lattice_basis(projected);
    }
    if (z_basis.cols != dim)
        throw Error("InternalError", "cocycle lattice is not full rank");

    // coboundary lattice: image of d_{n-1} plus the moduli
    IntMatrix b_gen;
    if (n == 0) {
        b_gen = diag_n;
    } else {
        IntMatrix d_prev = bar_matrix(g, m, n - 1);
        b_gen = IntMatrix(dim, d_prev.cols + dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < d_prev.cols; ++j)
                b_gen.at(i, j) = d_prev.at(i, j);
            b_gen.at(i, d_prev.cols + i) = diag_n.at(i, i);
        }
    }
    IntMatrix b_basis = column_lattice_basis(b_gen);
    if (b_basis.cols != dim)
        throw Error("InternalError", "coboundary lattice is not full rank");

    BigInt z_det = abs_determinant(z_basis);
    BigInt b_det = abs_determinant(b_basis);
    result.cocycle_count = full / z_det;
    result.coboundary_count = full / b_det;

    IntMatrix w = solve_in_basis(z_basis, b_basis);
    SmithResult s = smith_normal_form(w);
    for (const BigInt& dgn : s.diagonal)
        if (dgn > 1)
            result.invariant_factors.push_back(
                static_cast<long long>(dgn));
    return result;
}

namespace {

// all normalized cochains of the given degree in lexicographic order of
// their free-entry digits
class NormalizedEnumerator {
public:
    NormalizedEnumerator(const FiniteGroup& g, const CoefficientModule& m,
                         int degree)
        : index_(g.order, degree), mod_size_(m.size()), g_(g), degree_(degree) {}

    std::uint64_t count() const {
        return saturating_pow(mod_size_, index_.count());
    }

    Cochain decode(std::uint64_t code) const {
        Cochain c = zero_cochain(g_, degree_);
        for (int slot = index_.count() - 1; slot >= 0; --slot) {
            c.values[index_.tuples[slot]] = static_cast<int>(code % mod_size_);
            code /= mod_size_;
        }
        return c;
    }

    const NormalizedIndex& index() const { return index_; }

private:
    NormalizedIndex index_;
    int mod_size_;
    const FiniteGroup& g_;
    int degree_;
};

std::vector<long long> quotient_invariants(
    const std::vector<Cochain>& cocycles,
    const std::set<std::vector<int>>& coboundaries, const FiniteGroup& g,
    const CoefficientModule& m) {
    long long z = static_cast<long long>(cocycles.size());
    long long b = static_cast<long long>(coboundaries.size());
    long long h = z / b;
    std::map<long long, std::vector<int>> lambdas;
    long long rest = h;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        lambdas[p] = {};
    }
    if (rest > 1) lambdas[rest] = {};

    for (auto& [p, lambda] : lambdas) {
        std::vector<int> exps = {0};
        long long pk = 1;
        while (true) {
            pk *= p;
            long long count = 0;
            for (const auto& zc : cocycles) {
                std::vector<int> scaled(zc.values.size());
                for (std::size_t i = 0; i < zc.values.size(); ++i)
                    scaled[i] = m.scale(pk, zc.values[i]);
                if (coboundaries.count(scaled)) ++count;
            }
            count /= b; // elements of H killed by p^k
            int e = 0;
            while (count > 1) {
                count /= p;
                ++e;
            }
            exps.push_back(e);
            if (exps[exps.size() - 1] == exps[exps.size() - 2]) break;
        }
        for (std::size_t k = 1; k < exps.size(); ++k) {
            int parts_ge_k = exps[k] - exps[k - 1];
            while (static_cast<int>(lambda.size()) < parts_ge_k)
                lambda.push_back(0);
            for (int i = 0; i < parts_ge_k; ++i) lambda[i]++;
        }
        std::sort(lambda.rbegin(), lambda.rend());
    }
    for (auto it = lambdas.begin(); it != lambdas.end();)
        it = it->second.empty() ? lambdas.erase(it) : std::next(it);
    return combine_primary_parts(lambdas);
}

} // namespace

CohomologyResult cohomology_group_bruteforce(int n, const FiniteGroup& g,
                                             const CoefficientModule& m,
                                             std::uint64_t max_candidates) {
    if (n < 0 || n > kMaxCochainDegree)
        throw Error("DegreeTooHigh",
                    "cohomology supports 0 <= n <= " +
                        std::to_string(kMaxCochainDegree));
    NormalizedEnumerator enum_n(g, m, n);
    if (enum_n.count() > max_candidates)
        throw SizeLimitError("normalized cochain space " +
                             std::to_string(enum_n.count()) + " exceeds bound");

    std::vector<Cochain> cocycles;
    for (std::uint64_t code = 0; code < enum_n.count(); ++code) {
        Cochain c = enum_n.decode(code);
        if (coboundary(g, m, c).is_zero()) cocycles.push_back(std::move(c));
    }

    std::set<std::vector<int>> coboundaries;
    if (n == 0) {
        coboundaries.insert(zero_cochain(g, 0).values);
    } else {
        NormalizedEnumerator enum_prev(g, m, n - 1);
        if (enum_prev.count() > max_candidates)
            throw SizeLimitError("cochain space below exceeds bound");
        for (std::uint64_t code = 0; code < enum_prev.count(); ++code)
            coboundaries.insert(
                coboundary(g, m, enum_prev.decode(code)).values);
    }

    CohomologyResult result;
    result.cocycle_count = cocycles.size();
    result.coboundary_count = coboundaries.size();
    result.invariant_factors = quotient_invariants(cocycles, coboundaries, g, m);
    return result;
}

MonoidalCategory scaled_discrete_cat(const FiniteGroup& g,
                                     const CoefficientModule& m,
                                     const Cochain& alpha) {
    if (alpha.degree != 3 || alpha.group_order != g.order)
        throw Error("InvalidCoefficients", "associator must be a 3-cochain on G");
    const int n = g.order, a_size = m.size();
    const int mc = n * a_size; // morphism (x, a) at index x*|A| + a
    FinCategory c;
    c.object_count = n;
    c.mor_src.resize(mc);
    c.mor_tgt.resize(mc);
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < a_size; ++a) {
            c.mor_src[x * a_size + a] = x;
            c.mor_tgt[x * a_size + a] = x;
        }
    c.identity_at.resize(n);
    for (int x = 0; x < n; ++x) c.identity_at[x] = x * a_size;
    c.comp.assign(static_cast<std::size_t>(mc) * mc, -1);
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < a_size; ++a)
            for (int b = 0; b < a_size; ++b)
                c.comp[static_cast<std::size_t>(x * a_size + a) * mc +
                       (x * a_size + b)] = x * a_size + m.add(a, b);
    validate_category(c);

    MonoidalStructure mon;
    mon.unit = 0;
    mon.tensor_obj = g.table;
    std::vector<int> tm(static_cast<std::size_t>(mc) * mc);
    for (int f = 0; f < mc; ++f)
        for (int h = 0; h < mc; ++h)
            tm[static_cast<std::size_t>(f) * mc + h] =
                g.mul(f / a_size, h / a_size) * a_size +
                m.add(f % a_size, h % a_size);
    mon.tensor_mor = std::move(tm);

    std::vector<int> assoc(static_cast<std::size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                assoc[(static_cast<std::size_t>(x) * n + y) * n + z] =
                    g.mul(g.mul(x, y), z) * a_size +
                    alpha.at({x, y, z});
    mon.associator = std::move(assoc);
    return {std::move(c), std::move(mon)};
}

AssociatorReport associators(const FiniteGroup& g, const CoefficientModule& m,
                             std::uint64_t max_candidates, int threads) {
    if (m.rank() != 1)
        throw Error("InvalidCoefficients",
                    "associator enumeration expects cyclic coefficients");
    if (!m.action_is_trivial())
        throw Error("InvalidCoefficients",
                    "associator enumeration expects a trivial action");

    NormalizedEnumerator enum3(g, m, 3);
    if (enum3.count() > max_candidates)
        throw SizeLimitError("3-cochain space exceeds bound");

    const std::uint64_t total = enum3.count();
    std::vector<char> passes(total, 0), is_cocycle(total, 0);
    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t code = begin; code < end; ++code) {
            Cochain alpha = enum3.decode(code);
            auto cat = scaled_discrete_cat(g, m, alpha);
            passes[code] = check_monoidal(cat.cat, cat.mon) ? 1 : 0;
            is_cocycle[code] = coboundary(g, m, alpha).is_zero() ? 1 : 0;
        }
    };
    if (threads <= 1) {
        worker(0, total);
    } else {
        std::vector<std::future<void>> futures;
        std::uint64_t chunk = (total + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            std::uint64_t begin = t * chunk;
            std::uint64_t end = std::min(total, begin + chunk);
            if (begin >= end) break;
            futures.push_back(std::async(std::launch::async, worker, begin, end));
        }
        for (auto& f : futures) f.get();
    }

    AssociatorReport report;
    report.matches_cocycles = true;
    for (std::uint64_t code = 0; code < total; ++code) {
        if (passes[code]) report.pentagon_valid.push_back(enum3.decode(code));
        if (is_cocycle[code]) report.cocycle_count++;
        if (passes[code] != is_cocycle[code]) report.matches_cocycles = false;
    }

    // classes modulo coboundaries of 2-cochains
    NormalizedEnumerator enum2(g, m, 2);
    if (enum2.count() > max_candidates)
        throw SizeLimitError("2-cochain space exceeds bound");
    std::set<std::vector<int>> b3;
    for (std::uint64_t code = 0; code < enum2.count(); ++code)
        b3.insert(coboundary(g, m, enum2.decode(code)).values);
    report.class_count =
        report.cocycle_count / static_cast<long long>(b3.size());
    return report;
}

} // namespace catkit
