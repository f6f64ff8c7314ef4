#include "spechtkit/specht_hom.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace spechtkit {

int multiset_size(const Multiset& m)
{
    int n = 0;
    for (auto [x, k] : m)
        n += k;
    return n;
}

int multiplicity(const Multiset& m, int x)
{
    auto it = m.find(x);
    return it == m.end() ? 0 : it->second;
}

Multiset multiset_union(const Multiset& a, const Multiset& b)
{
    Multiset out = a;
    for (auto [x, k] : b)
        out[x] += k;
    return out;
}

namespace {

Multiset difference(const Multiset& a, const Multiset& b)
{
    Multiset out = a;
    for (auto [x, k] : b) {
        auto it = out.find(x);
        if (it == out.end() || it->second < k)
            throw Error(ErrorCode::ConstraintViolated, "multiset difference is not a submultiset");
        if ((it->second -= k) == 0)
            out.erase(it);
    }
    return out;
}

// Calls f on every submultiset of m with exactly k elements.
void for_each_submultiset(const Multiset& m, int k, const std::function<void(const Multiset&)>& f)
{
    std::vector<std::pair<int, int>> items(m.begin(), m.end());
    std::vector<int> suffix(items.size() + 1, 0);
    for (std::size_t i = items.size(); i-- > 0;)
        suffix[i] = suffix[i + 1] + items[i].second;
    Multiset cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (left == 0) {
            f(cur);
            return;
        }
        if (i == items.size() || suffix[i] < left)
            return;
        auto [x, avail] = items[i];
        for (int take = std::min(avail, left); take >= 0; --take) {
            if (take)
                cur[x] = take;
            else
                cur.erase(x);
            rec(i + 1, left - take);
        }
        cur.erase(x);
    };
    if (k >= 0)
        rec(0, k);
}

std::vector<int> multiset_to_row(const Multiset& m)
{
    std::vector<int> row;
    for (auto [x, k] : m)
        row.insert(row.end(), k, x);
    return row;
}

long long potential(const Tableau& t)
{
    int max_entry = 0;
    for (const auto& row : t.rows())
        for (int x : row)
            max_entry = std::max(max_entry, x);
    long long total = 0;
    std::vector<int> running(max_entry + 1, 0);
    for (const auto& row : t.rows()) {
        for (int x : row)
            ++running[x];
        int acc = 0;
        for (int l = 1; l <= max_entry; ++l) {
            acc += running[l];
            total += acc;
        }
    }
    return total;
}

} // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
{
    while (!rows_.empty() && rows_.back().empty())
        rows_.pop_back();
    std::vector<int> parts;
    for (const auto& row : rows_) {
        for (int x : row)
            if (x < 1)
                throw Error(ErrorCode::ConstraintViolated, "tableau entries must be positive");
        parts.push_back(static_cast<int>(row.size()));
    }
    shape_ = Partition(parts);
}

Tableau Tableau::parse(const std::string& text)
{
    std::vector<std::vector<int>> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, '/')) {
        std::vector<int> entries;
        try {
            if (row.find(',') != std::string::npos) {
                std::stringstream es(row);
                std::string e;
                while (std::getline(es, e, ','))
                    entries.push_back(std::stoi(e));
            } else {
                for (char ch : row) {
                    if (ch < '0' || ch > '9')
                        throw Error(ErrorCode::ParseError, "bad tableau entry in " + text);
                    entries.push_back(ch - '0');
                }
            }
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::ParseError, "bad tableau " + text);
        }
        rows.push_back(entries);
    }
    return Tableau(rows);
}

std::vector<int> Tableau::type() const
{
    std::vector<int> out;
    for (const auto& row : rows_)
        for (int x : row) {
            if (x > static_cast<int>(out.size()))
                out.resize(x, 0);
            ++out[x - 1];
        }
    return out;
}

Multiset Tableau::row_multiset(int row) const
{
    Multiset m;
    if (row >= 1 && row <= static_cast<int>(rows_.size()))
        for (int x : rows_[row - 1])
            ++m[x];
    return m;
}

int Tableau::prefix_count(int l, int r) const
{
    int n = 0;
    for (int i = 0; i < r && i < static_cast<int>(rows_.size()); ++i)
        for (int x : rows_[i])
            n += x <= l;
    return n;
}

bool Tableau::row_standard() const
{
    for (const auto& row : rows_)
        if (!std::is_sorted(row.begin(), row.end()))
            return false;
    return true;
}

bool Tableau::semistandard() const
{
    if (!row_standard())
        return false;
    for (std::size_t r = 1; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < rows_[r].size(); ++c)
            if (rows_[r][c] <= rows_[r - 1][c])
                return false;
    return true;
}

Tableau Tableau::sorted_rows() const
{
    auto rows = rows_;
    for (auto& row : rows)
        std::sort(row.begin(), row.end());
    return Tableau(rows);
}

std::string to_string(const Tableau& t)
{
    bool wide = false;
    for (const auto& row : t.rows())
        for (int x : row)
            wide |= x > 9;
    std::string out;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r)
            out += '/';
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
            if (wide && c)
                out += ',';
            out += std::to_string(t.rows()[r][c]);
        }
    }
    return out;
}

Tableau tableau_from_row_multisets(const std::vector<Multiset>& rows)
{
    std::vector<std::vector<int>> out;
    for (const auto& m : rows)
        out.push_back(multiset_to_row(m));
    return Tableau(out);
}

Dominance dominance(const Tableau& t, const Tableau& u)
{
    if (t.shape() != u.shape() || t.type() != u.type())
        throw Error(ErrorCode::ShapeTypeMismatch, to_string(t) + " vs " + to_string(u));
    int max_entry = static_cast<int>(t.type().size());
    int rows = t.shape().length();
    Dominance d{true, false};
    for (int r = 1; r <= rows && d.dominates; ++r)
        for (int l = 1; l <= max_entry; ++l) {
            int a = t.prefix_count(l, r), b = u.prefix_count(l, r);
            if (a < b) {
                d.dominates = false;
                break;
            }
            d.strictly |= a > b;
        }
    if (!d.dominates)
        d.strictly = false;
    return d;
}

int binomial_mod(long long n, long long k, int p)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    long long result = 1;
    while (n > 0 || k > 0) {
        int ni = static_cast<int>(n % p), ki = static_cast<int>(k % p);
        if (ki > ni)
            return 0;
        // small binomial by the multiplicative formula mod p
        long long num = 1, den = 1;
        for (int i = 0; i < ki; ++i) {
            num = num * (ni - i) % p;
            den = den * (i + 1) % p;
        }
        long long inv = 1, base = den, e = p - 2;
        while (e > 0) {
            if (e & 1)
                inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        result = result * num % p * inv % p;
        n /= p;
        k /= p;
    }
    return static_cast<int>(result);
}

int multinomial_mod(const std::vector<int>& parts, int p)
{
    long long result = 1;
    long long total = 0;
    for (int k : parts) {
        total += k;
        result = result * binomial_mod(total, k, p) % p;
        if (result == 0)
            return 0;
    }
    return static_cast<int>(result);
}

int signed_residue(int c, int p)
{
    c %= p;
    if (c < 0)
        c += p;
    return 2 * c > p ? c - p : c;
}

HomExpr::HomExpr(int p) : p_(p)
{
    require_prime(p);
}

HomExpr HomExpr::single(const Tableau& t, int p, int coeff)
{
    HomExpr e(p);
    e.add(t, coeff);
    return e;
}

int HomExpr::coeff(const Tableau& t) const
{
    auto it = terms_.find(t.sorted_rows());
    return it == terms_.end() ? 0 : it->second;
}

void HomExpr::add(const Tableau& t, long long coeff)
{
    int c = static_cast<int>(((coeff % p_) + p_) % p_);
    if (c == 0)
        return;
    Tableau key = t.row_standard() ? t : t.sorted_rows();
    if (!terms_.empty() && (terms_.begin()->first.shape() != key.shape() ||
                            terms_.begin()->first.type() != key.type()))
        throw Error(ErrorCode::ShapeTypeMismatch, "terms of one expression share shape and type");
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted && (it->second = (it->second + c) % p_) == 0)
        terms_.erase(it);
}

HomExpr& HomExpr::operator+=(const HomExpr& other)
{
    if (other.p_ != p_)
        throw Error(ErrorCode::InvalidPrime, "mixed characteristics");
    for (const auto& [t, c] : other.terms_)
        add(t, c);
    return *this;
}

HomExpr HomExpr::scaled(long long c) const
{
    HomExpr out(p_);
    for (const auto& [t, k] : terms_)
        out.add(t, c % p_ * k);
    return out;
}

std::string to_string(const HomExpr& e)
{
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : e.terms()) {
        int s = signed_residue(c, e.p());
        if (!first)
            out += s < 0 ? " - " : " + ";
        else if (s < 0)
            out += "-";
        first = false;
        if (std::abs(s) != 1)
            out += std::to_string(std::abs(s)) + "*";
        out += "[" + to_string(t) + "]";
    }
    return out;
}

HomExpr garnir_relation(const Tableau& a, int h, const Multiset& r, const Multiset& s,
                        const Multiset& t, int p)
{
    const Partition& shape = a.shape();
    if (h < 1 || h >= shape.length())
        throw Error(ErrorCode::ConstraintViolated, "row " + std::to_string(h) + " has no row below");
    Multiset both = multiset_union(a.row_multiset(h), a.row_multiset(h + 1));
    if (multiset_union(multiset_union(r, s), t) != both)
        throw Error(ErrorCode::ConstraintViolated, "R, S, T do not partition the two rows");
    if (multiset_size(s) <= shape[h])
        throw Error(ErrorCode::ConstraintViolated, "|S| must exceed the row length");
    HomExpr out(p);
    std::vector<Multiset> rows;
    for (int i = 1; i <= shape.length(); ++i)
        rows.push_back(a.row_multiset(i));
    for_each_submultiset(s, shape[h] - multiset_size(r), [&](const Multiset& u) {
        Multiset v = difference(s, u);
        long long coeff = 1;
        for (auto [x, k] : u)
            coeff = coeff * binomial_mod(multiplicity(r, x) + k, multiplicity(r, x), p) % p;
        for (auto [x, k] : v)
            coeff = coeff * binomial_mod(multiplicity(t, x) + k, multiplicity(t, x), p) % p;
        if (coeff == 0)
            return;
        auto term = rows;
        term[h - 1] = multiset_union(r, u);
        term[h] = multiset_union(t, v);
        out.add(tableau_from_row_multisets(term), coeff);
    });
    return out;
}

namespace {

struct Violation {
    int row = 0;  // upper row h of the pair (h, h+1)
    int col = 0;
};

std::optional<Violation> find_violation(const Tableau& a, Pivot pivot)
{
    const auto& rows = a.rows();
    int n = static_cast<int>(rows.size());
    auto check = [&](int h, int c) { return rows[h - 1][c - 1] >= rows[h][c - 1]; };
    if (pivot == Pivot::TopLeft) {
        for (int h = 1; h < n; ++h)
            for (int c = 1; c <= static_cast<int>(rows[h].size()); ++c)
                if (check(h, c))
                    return Violation{h, c};
    } else {
        for (int h = n - 1; h >= 1; --h)
            for (int c = static_cast<int>(rows[h].size()); c >= 1; --c)
                if (check(h, c))
                    return Violation{h, c};
    }
    return std::nullopt;
}

} // namespace

HomExpr semistandardize(const HomExpr& e, Pivot pivot)
{
    int p = e.p();
    HomExpr cur = e;
    std::set<std::pair<long long, Tableau>> pending;
    for (const auto& [t, c] : cur.terms())
        if (!t.semistandard())
            pending.emplace(potential(t), t);
    while (!pending.empty()) {
        auto [pot, a] = *pending.begin();
        pending.erase(pending.begin());
        int c = cur.coeff(a);
        if (c == 0)
            continue;
        auto viol = find_violation(a, pivot);
        int h = viol->row;
        int v = a.rows()[h][viol->col - 1];
        Multiset r, s, t;
        for (int x : a.rows()[h - 1])
            ++(x < v ? r : s)[x];
        for (int x : a.rows()[h])
            ++(x > v ? t : s)[x];
        HomExpr rel = garnir_relation(a, h, r, s, t, p);
        if (rel.coeff(a) != 1)
            throw Error(ErrorCode::NonTerminating, "pivot term lost its unit coefficient");
        for (const auto& [u, k] : rel.terms()) {
            if (u != a && potential(u) <= pot)
                throw Error(ErrorCode::NonTerminating, "relation term does not strictly dominate");
            if (u != a && !u.semistandard())
                pending.emplace(potential(u), u);
        }
        cur += rel.scaled(p - c);
    }
    return cur;
}

HomExpr move_ones(const Tableau& b, int h, int r, int p)
{
    if (h < 1 || h >= b.shape().length())
        throw Error(ErrorCode::ConstraintViolated, "row " + std::to_string(h) + " has no row below");
    Multiset upper = b.row_multiset(h), lower = b.row_multiset(h + 1);
    int n = multiplicity(lower, r);
    Multiset pool = upper;
    pool.erase(r);
    Multiset rs;
    if (n)
        rs[r] = n;
    std::vector<Multiset> rows;
    for (int i = 1; i <= b.shape().length(); ++i)
        rows.push_back(b.row_multiset(i));
    HomExpr out(p);
    long long sign = n % 2 ? p - 1 : 1;
    for_each_submultiset(pool, n, [&](const Multiset& v) {
        long long coeff = sign;
        for (auto [x, k] : v)
            coeff = coeff * binomial_mod(multiplicity(lower, x) + k, k, p) % p;
        auto term = rows;
        term[h - 1] = multiset_union(difference(upper, v), rs);
        term[h] = multiset_union(difference(lower, rs), v);
        out.add(tableau_from_row_multisets(term), coeff);
    });
    return out;
}

HomExpr compose(const Tableau& t, const Tableau& s, int p)
{
    std::vector<int> type = s.type();
    if (type != t.shape().parts())
        throw Error(ErrorCode::ChainMismatch,
                    "type of " + to_string(s) + " is not the shape of " + to_string(t));
    int ti = t.shape().length();
    int sj = s.shape().length();
    // need[i][j]: number of entries equal to i+1 in row j+1 of s
    std::vector<std::vector<int>> need(ti, std::vector<int>(sj, 0));
    for (int j = 0; j < sj; ++j)
        for (int x : s.rows()[j])
            ++need[x - 1][j];
    std::vector<std::vector<Multiset>> x(ti, std::vector<Multiset>(sj));
    HomExpr out(p);
    std::function<void(int, int, const Multiset&)> rec = [&](int i, int j, const Multiset& left) {
        if (i == ti) {
            std::vector<Multiset> rows(sj);
            long long coeff = 1;
            for (int col = 0; col < sj && coeff; ++col) {
                Multiset values;
                for (int k = 0; k < ti; ++k)
                    values = multiset_union(values, x[k][col]);
                for (auto [val, total] : values) {
                    std::vector<int> parts;
                    for (int k = 0; k < ti; ++k)
                        parts.push_back(multiplicity(x[k][col], val));
                    coeff = coeff * multinomial_mod(parts, p) % p;
                }
                rows[col] = values;
            }
            if (coeff)
                out.add(tableau_from_row_multisets(rows), coeff);
            return;
        }
        if (j == sj) {
            rec(i + 1, 0, t.row_multiset(i + 2));
            return;
        }
        if (j == sj - 1) {
            if (multiset_size(left) != need[i][j])
                return;
            x[i][j] = left;
            rec(i, j + 1, Multiset{});
            return;
        }
        for_each_submultiset(left, need[i][j], [&](const Multiset& piece) {
            x[i][j] = piece;
            rec(i, j + 1, difference(left, piece));
        });
    };
    if (ti == 0)
        out.add(Tableau(), 1);
    else
        rec(0, 0, t.row_multiset(1));
    return out;
}

HomExpr compose(const HomExpr& outer, const HomExpr& inner)
{
    if (outer.p() != inner.p())
        throw Error(ErrorCode::InvalidPrime, "mixed characteristics");
    int p = outer.p();
    HomExpr out(p);
    for (const auto& [t, a] : outer.terms())
        for (const auto& [s, b] : inner.terms())
            out += compose(t, s, p).scaled(static_cast<long long>(a) * b % p);
    return out;
}

std::vector<int> nice_values(const Partition& lambda, int p)
{
    std::vector<int> out;
    if (lambda.empty())
        return out;
    int full = restrictise(lambda, p)[1];
    for (int m = 1; full - (m - 1) * (p - 1) >= 0; ++m) {
        int bound = full - (m - 1) * (p - 1);
        if (lambda[m] < bound)
            break;
        if (lambda[m] == bound)
            out.push_back(m);
    }
    return out;
}

Partition strip_for_nice(const Partition& lambda, int p, int m)
{
    std::vector<int> parts;
    for (int i = 1; i < m; ++i)
        parts.push_back(lambda[i] - p + 1);
    for (int i = m + 1; i <= lambda.length(); ++i)
        parts.push_back(lambda[i]);
    return make_partition(parts);
}

Tableau insert_for_nice(const Tableau& u, const Partition& lambda, int p, int m)
{
    std::vector<std::vector<int>> rows(lambda.length());
    for (int x = 1; x <= lambda.length(); ++x)
        for (int y = 1; y <= lambda[x]; ++y) {
            int v;
            if (x < m)
                v = y < p ? 1 : u.at({x, y - p + 1}) + 1;
            else if (x == m)
                v = 1;
            else
                v = u.at({x - 1, y}) + 1;
            rows[x - 1].push_back(v);
        }
    return Tableau(rows);
}

Tableau magic_tableau(const Partition& lambda, int p)
{
    require_prime(p);
    std::vector<std::pair<Partition, int>> chain;
    Partition cur = lambda;
    while (!cur.empty()) {
        std::vector<int> nice = nice_values(cur, p);
        if (nice.empty())
            throw Error(ErrorCode::ConstraintViolated, "no nice value for " + to_string(cur));
        chain.emplace_back(cur, nice.front());
        cur = strip_for_nice(cur, p, nice.front());
    }
    Tableau t;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        t = insert_for_nice(t, it->first, p, it->second);
    return t;
}

Tableau re_tableau(const Partition& lambda, int p)
{
    require_prime(p);
    std::vector<std::vector<int>> rows(lambda.length());
    for (int x = 1; x <= lambda.length(); ++x)
        for (int y = 1; y <= lambda[x]; ++y) {
            int missing = 0;
            for (int x2 = x + 1; y - (p - 1) * (x2 - x) >= 1; ++x2)
                missing += !lambda.contains({x2, y - (p - 1) * (x2 - x)});
            rows[x - 1].push_back(x + missing);
        }
    return Tableau(rows);
}

HomExpr restrictisation_hom(const Partition& lambda, int p)
{
    return semistandardize(HomExpr::single(magic_tableau(lambda, p), p));
}

Partition move_node(const Partition& lambda, Node from, Node to)
{
    try {
        return add_node(remove_node(lambda, from), to);
    } catch (const Error& e) {
        throw Error(ErrorCode::PreconditionViolated, e.what());
    }
}

namespace {

void check_carter_payne(const Partition& lambda, int p, Node from, Node to)
{
    require_prime(p);
    auto [a, b] = from;
    auto [c, d] = to;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::PreconditionViolated, to_string(lambda) + ": " + why);
    };
    if (!(lambda.contains(from) && lambda[a] == b && lambda[a + 1] < b))
        fail("first node is not removable");
    if (!(c >= 1 && d >= 1 && lambda[c] == d - 1 && (c == 1 || lambda[c - 1] >= d)))
        fail("second node is not addable");
    if (c <= a)
        fail("addable node must lie below the removable node");
    if (residue(from, Characteristic(p)) != residue(to, Characteristic(p)))
        fail("residues differ");
    for (int r = a + 1; r < c; ++r)
        if (lambda[r] != d)
            fail("removable node strictly between the two rows");
}

} // namespace

Tableau carter_payne_tableau(const Partition& lambda, Node from, Node to, int r)
{
    auto [a, b] = from;
    auto [c, d] = to;
    if (r <= a || r > c)
        throw Error(ErrorCode::PreconditionViolated, "row index outside (a, c]");
    std::vector<std::vector<int>> rows(lambda.length());
    for (int x = 1; x <= lambda.length(); ++x)
        for (int y = 1; y <= lambda[x]; ++y) {
            int v = x;
            if (x == a && y == b)
                v = r;
            else if (r <= x && x < c && y == d)
                v = x + 1;
            rows[x - 1].push_back(v);
        }
    return Tableau(rows);
}

HomExpr carter_payne_hom(const Partition& lambda, int p, Node from, Node to)
{
    check_carter_payne(lambda, p, from, to);
    HomExpr out(p);
    for (int r = from.row + 1; r <= to.row; ++r)
        out.add(carter_payne_tableau(lambda, from, to, r), r % 2 ? p - 1 : 1);
    return out;
}

ComposedResult composed_nonvanishing(const Partition& lambda, int p, Node from, Node to)
{
    check_carter_payne(lambda, p, from, to);
    if ((p - 1) * to.row + to.col < (p - 1) * from.row + from.col)
        throw Error(ErrorCode::PreconditionViolated, "added node lies in an earlier ramp");
    Partition mu = move_node(lambda, from, to);
    HomExpr beta = restrictisation_hom(mu, p);
    HomExpr alpha = carter_payne_hom(lambda, p, from, to);
    ComposedResult out{semistandardize(compose(beta, alpha)), Tableau(), 0};
    auto rows = re_tableau(mu, p).rows();
    int moved = rows[to.row - 1][to.col - 1];
    rows[to.row - 1].erase(rows[to.row - 1].begin() + (to.col - 1));
    rows[from.row - 1].push_back(moved);
    out.v = Tableau(rows).sorted_rows();
    out.v_coefficient = out.expr.coeff(out.v);
    return out;
}

} // namespace spechtkit
