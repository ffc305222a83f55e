#include "nvcat/complex.hpp"

#include "nvcat/errors.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

namespace nvcat {

namespace {

std::string describe(const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "]";
}

}  // namespace

Simplex face(const Simplex& s, std::size_t i) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t k = 0; k < s.size(); ++k)
        if (k != i) f.push_back(s[k]);
    return f;
}

SimplicialComplex SimplicialComplex::from_maximal(int vertex_count, std::vector<Simplex> simplices) {
    if (vertex_count < 0) throw ValidationError("vertex count must be non-negative");
    std::set<Simplex> listed;
    std::vector<std::string> problems;
    for (auto& s : simplices) {
        if (s.empty()) {
            problems.push_back("empty simplex");
            continue;
        }
        for (int v : s)
            if (v < 0 || v >= vertex_count)
                problems.push_back("vertex index " + std::to_string(v) + " out of range in " + describe(s));
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) problems.push_back("repeated vertex in " + describe(s));
        if (!listed.insert(s).second) problems.push_back("duplicate simplex " + describe(s));
    }
    if (!problems.empty()) throw ValidationError("invalid complex: " + problems.front(), problems);

    std::set<Simplex> all;
    for (int v = 0; v < vertex_count; ++v) all.insert(Simplex{v});
    // Every subset of a listed simplex is a face.
    for (const auto& s : listed) {
        if (s.size() > 20) throw LimitError("simplex of dimension " + std::to_string(s.size() - 1) + " exceeds the limit 19");
        const std::uint32_t n = static_cast<std::uint32_t>(s.size());
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Simplex f;
            for (std::uint32_t k = 0; k < n; ++k)
                if (mask & (1u << k)) f.push_back(s[k]);
            all.insert(std::move(f));
        }
    }

    SimplicialComplex x;
    x.vertex_count_ = vertex_count;
    for (const auto& s : all) {
        std::size_t q = s.size() - 1;
        if (x.by_dim_.size() <= q) x.by_dim_.resize(q + 1);
        x.by_dim_[q].push_back(s);
    }
    x.index_.resize(x.by_dim_.size());
    for (std::size_t q = 0; q < x.by_dim_.size(); ++q)
        for (std::size_t i = 0; i < x.by_dim_[q].size(); ++i) x.index_[q].emplace(x.by_dim_[q][i], i);
    return x;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
    static const std::vector<Simplex> empty;
    if (q < 0 || q >= static_cast<int>(by_dim_.size())) return empty;
    return by_dim_[q];
}

std::size_t SimplicialComplex::total_count() const {
    std::size_t n = 0;
    for (const auto& d : by_dim_) n += d.size();
    return n;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& d : by_dim_) f.push_back(d.size());
    return f;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (std::size_t q = 0; q < by_dim_.size(); ++q)
        chi += (q % 2 ? -1L : 1L) * static_cast<long>(by_dim_[q].size());
    return chi;
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
    if (s.empty() || s.size() > index_.size()) return std::nullopt;
    const auto& m = index_[s.size() - 1];
    auto it = m.find(s);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

std::size_t SimplicialComplex::index(const Simplex& s) const {
    auto i = find(s);
    if (!i) throw ValidationError("simplex " + describe(s) + " is not in the complex");
    return *i;
}

bool SimplicialComplex::has_edge(int i, int j) const {
    if (i == j) return false;
    return find(i < j ? Simplex{i, j} : Simplex{j, i}).has_value();
}

std::vector<std::vector<int>> SimplicialComplex::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count_);
    for (const auto& e : simplices(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

bool SimplicialComplex::connected() const {
    if (vertex_count_ == 0) return false;
    auto adj = adjacency();
    std::vector<bool> seen(vertex_count_, false);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = true;
    int reached = 1;
    while (!todo.empty()) {
        int v = todo.front();
        todo.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                todo.push(w);
            }
    }
    return reached == vertex_count_;
}

IntegralCocycle IntegralCocycle::zero(const SimplicialComplex& x) {
    IntegralCocycle xi;
    for (const auto& e : x.simplices(1)) xi.values_[{e[0], e[1]}] = 0;
    return xi;
}

void IntegralCocycle::set(int i, int j, std::int64_t value) {
    if (i == j) throw ValidationError("degenerate edge [" + std::to_string(i) + "," + std::to_string(j) + "]");
    if (i < j)
        values_[{i, j}] = value;
    else
        values_[{j, i}] = -value;
}

std::optional<std::int64_t> IntegralCocycle::find(int i, int j) const {
    if (i == j) return std::nullopt;
    auto it = values_.find({std::min(i, j), std::max(i, j)});
    if (it == values_.end()) return std::nullopt;
    return i < j ? it->second : -it->second;
}

std::int64_t IntegralCocycle::value(int i, int j) const {
    auto v = find(i, j);
    if (!v) throw ValidationError("missing cocycle value on edge [" + std::to_string(std::min(i, j)) + "," + std::to_string(std::max(i, j)) + "]");
    return *v;
}

bool IntegralCocycle::all_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const auto& kv) { return kv.second == 0; });
}

IntegralCocycle IntegralCocycle::scaled(std::int64_t factor) const {
    IntegralCocycle out = *this;
    for (auto& [e, v] : out.values_) v *= factor;
    return out;
}

IntegralCocycle IntegralCocycle::operator-(const IntegralCocycle& o) const {
    IntegralCocycle out = *this;
    for (const auto& [e, v] : o.values_) out.values_[e] -= v;
    return out;
}

CocycleReport validate_cocycle(const SimplicialComplex& x, const IntegralCocycle& xi) {
    std::vector<std::string> missing;
    for (const auto& e : x.simplices(1))
        if (!xi.find(e[0], e[1])) missing.push_back("missing cocycle value on edge " + describe(e));
    for (const auto& [e, v] : xi.values())
        if (!x.has_edge(e.first, e.second))
            missing.push_back("cocycle names edge [" + std::to_string(e.first) + "," + std::to_string(e.second) + "] which is not in the complex");
    if (!missing.empty()) throw ValidationError(missing.front(), missing);

    CocycleReport report;
    for (const auto& t : x.simplices(2)) {
        if (xi.value(t[0], t[1]) + xi.value(t[1], t[2]) != xi.value(t[0], t[2])) {
            report.ok = false;
            report.violations.push_back(t);
        }
    }
    return report;
}

namespace {

int as_int(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer()) throw ValidationError(std::string("expected an integer for ") + what);
    auto v = j.get<std::int64_t>();
    if (v < INT32_MIN || v > INT32_MAX) throw ValidationError(std::string(what) + " out of range");
    return static_cast<int>(v);
}

}  // namespace

SimplicialComplex load_complex(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ValidationError("input document must be a JSON object");
    if (!doc.contains("vertices")) throw ValidationError("input document lacks \"vertices\"");
    if (!doc.contains("maximal_simplices") || !doc["maximal_simplices"].is_array())
        throw ValidationError("input document lacks a \"maximal_simplices\" array");
    int n = as_int(doc["vertices"], "vertices");
    std::vector<Simplex> simplices;
    for (const auto& s : doc["maximal_simplices"]) {
        if (!s.is_array()) throw ValidationError("each simplex must be an array of vertex indices");
        Simplex t;
        for (const auto& v : s) t.push_back(as_int(v, "vertex index"));
        simplices.push_back(std::move(t));
    }
    return SimplicialComplex::from_maximal(n, std::move(simplices));
}

Input load_input(const nlohmann::json& doc) {
    Input in{load_complex(doc), {}};
    if (!doc.contains("xi")) {
        in.xi = IntegralCocycle::zero(in.complex);
        return in;
    }
    if (!doc["xi"].is_array()) throw ValidationError("\"xi\" must be an array");
    std::set<std::pair<int, int>> seen;
    for (const auto& entry : doc["xi"]) {
        if (!entry.is_object() || !entry.contains("edge") || !entry.contains("value"))
            throw ValidationError("each xi entry needs \"edge\" and \"value\"");
        const auto& e = entry["edge"];
        if (!e.is_array() || e.size() != 2) throw ValidationError("xi edge must be a pair [i,j]");
        int i = as_int(e[0], "edge endpoint");
        int j = as_int(e[1], "edge endpoint");
        if (i >= j) throw ValidationError("xi edges must be listed with i<j, got [" + std::to_string(i) + "," + std::to_string(j) + "]");
        if (!entry["value"].is_number_integer()) throw ValidationError("xi values must be integers");
        if (!seen.insert({i, j}).second)
            throw ValidationError("duplicate xi entry for edge [" + std::to_string(i) + "," + std::to_string(j) + "]");
        in.xi.set(i, j, entry["value"].get<std::int64_t>());
    }
    return in;
}

Input load_input_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    return load_input(doc);
}

Input load_input_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot read input file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return load_input_text(ss.str());
}

nlohmann::json simplex_json(const Simplex& s) { return nlohmann::json(s); }

nlohmann::json to_json(const CocycleReport& r) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& s : r.violations) v.push_back(simplex_json(s));
    return {{"ok", r.ok}, {"violations", v}};
}

}  // namespace nvcat
