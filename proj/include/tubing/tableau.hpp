#pragma once

// Row-filled tableaux (SYT, balanced, SYCT, Edelman-Greene P/Q) and
// cell-set tableaux for skew and holed diagrams. Row 1 is on top and
// columns increase downward throughout.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "tubing/perm.hpp"

namespace tubing {

// Left-justified rows; covers partition shapes and composition shapes.
struct Tableau {
    std::vector<std::vector<int>> rows;

    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {}

    int row_count() const { return static_cast<int>(rows.size()); }
    int row_length(int i) const { return static_cast<int>(rows[i - 1].size()); }
    int at(int i, int j) const { return rows[i - 1][j - 1]; }  // 1-indexed
    int& at(int i, int j) { return rows[i - 1][j - 1]; }
    bool has_cell(int i, int j) const {
        return i >= 1 && i <= row_count() && j >= 1 && j <= row_length(i);
    }
    int cell_count() const;
    std::vector<int> shape() const;
    bool has_partition_shape() const;

    auto operator<=>(const Tableau&) const = default;
};

// Arbitrary cell set; used for skew-balanced and holed (G-balanced) tableaux.
struct GridTableau {
    std::map<std::pair<int, int>, int> cells;  // (row, col) -> entry, 1-indexed

    bool has_cell(int i, int j) const { return cells.count({i, j}) > 0; }
    int at(int i, int j) const { return cells.at({i, j}); }
    int cell_count() const { return static_cast<int>(cells.size()); }

    auto operator<=>(const GridTableau&) const = default;
};

std::vector<int> staircase(int n);  // (n-1, n-2, ..., 1)

GridTableau to_grid(const Tableau& t);
// Requires the cells to form left-justified rows starting at column 1.
Tableau to_rows(const GridTableau& t);

// -- predicates ------------------------------------------------------------

bool is_syt(const Tableau& t);

// Hook-balance: #{entries in the hook <= T(i,j)} equals the hook's leg
// length (cells below, inclusive). On staircase shapes this reduces to
// the smaller-left/larger-below condition.
bool is_balanced(const Tableau& t);
bool is_balanced(const GridTableau& t);

// Staircase SYT of st_N; rows N-n-1 .. N-2 must satisfy
// T(i,j) < T(i+1, j-1); row 0 counts as all zeros when n = N-1.
bool is_n_row_shiftable(const Tableau& t, int n);

bool is_syct(const Tableau& t);  // composition shape, standard entries

// -- walks and balanced tableaux -------------------------------------------

// The k-th pair (a,b) becomes entry k in cell (a, N-b+1).
Tableau walk_to_balanced(const std::vector<Inversion>& walk, int N);
std::vector<Inversion> balanced_to_walk(const Tableau& t);

// Hyperplane labels crossed along the chain of rw.
std::vector<Inversion> word_to_walk(const ReducedWord& rw);
ReducedWord walk_to_word(const std::vector<Inversion>& walk, int N);

// -- Edelman-Greene ---------------------------------------------------------

std::pair<Tableau, Tableau> eg_insert(const ReducedWord& rw);
Tableau eg_q(const ReducedWord& rw);

Tableau elementary_promotion(const Tableau& t);

// Inverse of eg_q on staircase SYT; defined for any standard shape.
ReducedWord gamma_word(const Tableau& t);

// shR(omega_0^(n+1)): words whose Q-tableau is n-row-shiftable; checked
// against the lattice/reverse-lattice characterization.
std::vector<ReducedWord> shiftable_words(int n);

// -- composition tableaux ---------------------------------------------------

// Row sort by length then column sort; restricts to SYCT -> SYT.
Tableau rho_hat(const Tableau& syct);
Tableau rho_hat_inverse(const Tableau& syt);

// {i : i+1 sits in a strictly lower row than i}.
std::set<int> tableau_descents(const Tableau& syt);
// Defined through rho_hat; descent sets transfer unchanged.
std::set<int> syct_descents(const Tableau& syct);

Tableau standardize(const Tableau& t);
GridTableau standardize(const GridTableau& t);

// -- exhaustive enumeration (guarded by max_enumeration_cells) --------------

std::vector<Tableau> enumerate_syt(const std::vector<int>& shape);
std::vector<Tableau> enumerate_syct(const std::vector<int>& comp);
std::vector<Tableau> enumerate_balanced(const std::vector<int>& shape);

}  // namespace tubing
