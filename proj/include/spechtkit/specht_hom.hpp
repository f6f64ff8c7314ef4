#pragma once

#include <map>
#include <string>
#include <vector>

#include "spechtkit/partition.hpp"

namespace spechtkit {

using Multiset = std::map<int, int>;

int multiset_size(const Multiset& m);
int multiplicity(const Multiset& m, int x);
Multiset multiset_union(const Multiset& a, const Multiset& b);

// Tableau of partition shape with positive entries, stored row by row.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    // Parses "11223333/112244/11/2/5"; rows with entries above 9 use commas: "1,10/2".
    static Tableau parse(const std::string& text);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(Node n) const { return rows_[n.row - 1][n.col - 1]; }

    // Content composition: entry i appears type()[i-1] times.
    std::vector<int> type() const;
    Multiset row_multiset(int row) const;
    // Number of entries <= l in rows 1..r.
    int prefix_count(int l, int r) const;

    bool row_standard() const;
    bool semistandard() const;
    Tableau sorted_rows() const;

    auto operator<=>(const Tableau&) const = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

std::string to_string(const Tableau& t);
Tableau tableau_from_row_multisets(const std::vector<Multiset>& rows);

struct Dominance {
    bool dominates = false;
    bool strictly = false;
};
Dominance dominance(const Tableau& t, const Tableau& u);

// Binomial and multinomial coefficients reduced mod p by Lucas's theorem.
int binomial_mod(long long n, long long k, int p);
int multinomial_mod(const std::vector<int>& parts, int p);

// Linear combination of tableau homomorphisms over the field with p elements.
// Terms are keyed by tableaux with sorted rows; zero coefficients are never stored.
class HomExpr {
public:
    explicit HomExpr(int p = 2);
    static HomExpr single(const Tableau& t, int p, int coeff = 1);

    int p() const { return p_; }
    const std::map<Tableau, int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int coeff(const Tableau& t) const;

    void add(const Tableau& t, long long coeff);
    HomExpr& operator+=(const HomExpr& other);
    HomExpr scaled(long long c) const;

    bool operator==(const HomExpr&) const = default;

private:
    int p_;
    std::map<Tableau, int> terms_;
};

std::string to_string(const HomExpr& e);

// Signed representative in (-p/2, p/2].
int signed_residue(int c, int p);

// The relation sum over (U,V) of prod binom(R_i+U_i,R_i) binom(T_i+V_i,T_i) A[U,V] = 0,
// using rows h and h+1 of A.
HomExpr garnir_relation(const Tableau& a, int h, const Multiset& r, const Multiset& s,
                        const Multiset& t, int p);

enum class Pivot { TopLeft, BottomRight };

// Rewrites e in the semistandard basis.
HomExpr semistandardize(const HomExpr& e, Pivot pivot = Pivot::TopLeft);

// Right-hand side of the relation moving every r in row h+1 of b up to row h.
HomExpr move_ones(const Tableau& b, int h, int r, int p);

// Theta_T after Theta_S, where S has type equal to the shape of T.
HomExpr compose(const Tableau& t, const Tableau& s, int p);
// Bilinear extension: outer after inner.
HomExpr compose(const HomExpr& outer, const HomExpr& inner);

// Rows m with lambda_m + (m-1)(p-1) equal to the number of full ramps and no shorter row above.
std::vector<int> nice_values(const Partition& lambda, int p);
Partition strip_for_nice(const Partition& lambda, int p, int m);
Tableau insert_for_nice(const Tableau& u, const Partition& lambda, int p, int m);

Tableau magic_tableau(const Partition& lambda, int p);
// Each node holds the row it moves to under restrictisation.
Tableau re_tableau(const Partition& lambda, int p);
HomExpr restrictisation_hom(const Partition& lambda, int p);

// Moves removable node (a,b) to addable node (c,d).
Partition move_node(const Partition& lambda, Node from, Node to);
Tableau carter_payne_tableau(const Partition& lambda, Node from, Node to, int r);
HomExpr carter_payne_hom(const Partition& lambda, int p, Node from, Node to);

struct ComposedResult {
    HomExpr expr;
    Tableau v;
    int v_coefficient = 0;
};
ComposedResult composed_nonvanishing(const Partition& lambda, int p, Node from, Node to);

} // namespace spechtkit
