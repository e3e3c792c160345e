#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qaffine/errors.hpp"

namespace qaffine {

using IntMatrix = std::vector<std::vector<int>>;
using RootVec = std::vector<int>;  // simple-root coordinates

// Undirected graph on nodes 1..n. Used both for Dynkin diagrams of g_0 and of g_fin.
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(int n) : adj_(n) {}

    static Diagram chain(int n);

    void add_edge(int i, int j);
    int size() const { return static_cast<int>(adj_.size()); }
    bool adjacent(int i, int j) const;
    const std::vector<int>& neighbours(int i) const { return adj_.at(i - 1); }
    int dd(int i, int j) const;

private:
    std::vector<std::vector<int>> adj_;
};

struct FinType {
    char series = 'A';  // 'A', 'D' or 'E'
    int rank = 1;

    std::string name() const { return std::string(1, series) + std::to_string(rank); }
    bool operator==(const FinType&) const = default;
};

FinType parse_fin_type(const std::string& s);

// Fundamental-weight coordinates.
struct FinWeight {
    std::vector<int> coords;
    bool operator==(const FinWeight&) const = default;
};

// A permutation of the nodes, perm[i-1] = image of node i.
struct DiagramAutomorphism {
    std::vector<int> perm;
    int operator()(int i) const { return perm.at(i - 1); }
    bool operator==(const DiagramAutomorphism&) const = default;
};

using WordLetter = std::variant<int, DiagramAutomorphism>;
using Word = std::vector<WordLetter>;

class FinRootSystem {
public:
    explicit FinRootSystem(FinType type);

    const FinType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const IntMatrix& cartan() const { return cartan_; }
    const Diagram& diagram() const { return diagram_; }
    const std::vector<RootVec>& positive_roots() const { return positive_; }
    int coxeter_number() const;

    RootVec simple_root(int i) const;
    FinWeight to_weight(const RootVec& beta) const;
    // Exact inverse of to_weight; nullopt when the weight is not in the root lattice.
    std::optional<RootVec> to_root(const FinWeight& w) const;

    // (beta, varpi_j) is the j-th simple-root coordinate.
    int inner(const RootVec& a, const RootVec& b) const;

    FinWeight reflect(int i, const FinWeight& w) const;
    RootVec reflect(int i, const RootVec& beta) const;
    FinWeight apply(const DiagramAutomorphism& rho, const FinWeight& w) const;
    RootVec apply(const DiagramAutomorphism& rho, const RootVec& beta) const;

    // Rightmost letter acts first.
    FinWeight apply_word(const Word& word, const FinWeight& w) const;
    RootVec apply_word(const Word& word, const RootVec& beta) const;
    // Matrix of the word acting on simple-root coordinates (column j = image of alpha_j).
    IntMatrix word_matrix(const Word& word) const;

    bool is_positive_root(const RootVec& beta) const;
    int root_index(const RootVec& beta) const;  // -1 when beta is not a positive root

private:
    FinType type_;
    Diagram diagram_;
    IntMatrix cartan_;
    std::vector<RootVec> positive_;
};

Diagram fin_diagram(FinType type);
IntMatrix cartan_matrix(FinType type);
std::vector<RootVec> enumerate_positive_roots(const IntMatrix& cartan);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
RootVec mat_apply(const IntMatrix& a, const RootVec& v);
IntMatrix identity_matrix(int n);

bool is_nonneg(const RootVec& v);
bool is_nonpos(const RootVec& v);
bool is_zero(const RootVec& v);
RootVec negate(RootVec v);
std::string root_string(const RootVec& beta);  // e.g. "(1100)"

}  // namespace qaffine
