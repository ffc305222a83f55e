#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nvcat {

/// Strictly increasing vertex tuple.
using Simplex = std::vector<int>;

/// Finite ordered simplicial complex. Immutable once built.
///
/// Simplices of each dimension are stored in lexicographic order; that order
/// is the basis order of every chain and cochain group in the project.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Validates the input and closes it under faces. Vertices 0..vertex_count-1
    /// are always 0-simplices. Throws ValidationError on repeated vertices inside
    /// a simplex, duplicate simplices, or indices out of range.
    static SimplicialComplex from_maximal(int vertex_count, std::vector<Simplex> simplices);

    int vertex_count() const { return vertex_count_; }
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    /// q-simplices; empty for q outside [0, dimension()].
    const std::vector<Simplex>& simplices(int q) const;
    std::size_t count(int q) const { return simplices(q).size(); }
    std::size_t total_count() const;
    std::vector<std::size_t> f_vector() const;
    long euler_characteristic() const;

    std::optional<std::size_t> find(const Simplex& s) const;
    /// Index of s among simplices of its dimension; throws if absent.
    std::size_t index(const Simplex& s) const;
    bool has_edge(int i, int j) const;

    /// Sorted neighbour lists.
    std::vector<std::vector<int>> adjacency() const;
    bool connected() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertex_count_ == b.vertex_count_ && a.by_dim_ == b.by_dim_;
    }

private:
    int vertex_count_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, std::size_t>> index_;
};

/// i-th face: drop vertex i.
Simplex face(const Simplex& s, std::size_t i);

/// Integer-valued 1-cochain on oriented edges; value(j,i) = -value(i,j).
class IntegralCocycle {
public:
    IntegralCocycle() = default;

    static IntegralCocycle zero(const SimplicialComplex& x);

    /// Stores the value for the edge oriented i -> j (either order accepted).
    void set(int i, int j, std::int64_t value);
    std::optional<std::int64_t> find(int i, int j) const;
    /// Throws ValidationError when the edge has no value.
    std::int64_t value(int i, int j) const;

    const std::map<std::pair<int, int>, std::int64_t>& values() const { return values_; }
    bool all_zero() const;
    IntegralCocycle scaled(std::int64_t factor) const;
    IntegralCocycle operator-(const IntegralCocycle& o) const;

    friend bool operator==(const IntegralCocycle&, const IntegralCocycle&) = default;

private:
    std::map<std::pair<int, int>, std::int64_t> values_;  // keys with first < second
};

struct CocycleReport {
    bool ok = true;
    std::vector<Simplex> violations;
};

/// Checks xi(ij) + xi(jk) = xi(ik) on every triangle. Throws ValidationError if
/// an edge of x has no value or xi names an edge that is not in x.
CocycleReport validate_cocycle(const SimplicialComplex& x, const IntegralCocycle& xi);

/// A complex together with its cocycle, as read from an input document.
struct Input {
    SimplicialComplex complex;
    IntegralCocycle xi;
};

/// Parses `{"vertices": n, "maximal_simplices": [...], "xi": [{"edge": [i,j], "value": m}, ...]}`.
/// A missing "xi" key means xi = 0. Does not check the cocycle condition.
Input load_input(const nlohmann::json& doc);
Input load_input_text(const std::string& text);
Input load_input_file(const std::string& path);
SimplicialComplex load_complex(const nlohmann::json& doc);

nlohmann::json to_json(const CocycleReport& r);
nlohmann::json simplex_json(const Simplex& s);

}  // namespace nvcat
