#include "satforge/construction.hpp"

#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "satforge/saturation.hpp"

namespace satforge {
namespace {

const std::vector<std::string> kBaseNames = {"x1", "x2", "y1", "y2", "y3", "y4", "a0", "b0", "c0"};

// Reconstructed from the witness paths of the construction; see build_g0().
const std::vector<std::pair<std::string, std::string>> kBaseEdges = {
    {"x1", "x2"}, {"x1", "y1"}, {"x1", "y2"}, {"x1", "a0"}, {"x2", "y3"}, {"x2", "y4"},
    {"x2", "c0"}, {"y1", "y2"}, {"y2", "y3"}, {"y2", "y4"}, {"a0", "b0"}, {"b0", "c0"},
};

std::string indexed(char letter, int i) { return std::string(1, letter) + std::to_string(i); }

ConstructionSpec make_spec(int n) {
    ConstructionSpec spec;
    spec.n = n;
    spec.t = n / 3;
    spec.epsilon = n % 3;
    Vertex next = 0;
    for (const auto& name : kBaseNames) spec.labels.emplace(name, next++);
    for (int i = 1; i <= spec.t - 3; ++i)
        for (char c : {'a', 'b', 'c'}) spec.labels.emplace(indexed(c, i), next++);
    for (int i = 1; i <= spec.epsilon; ++i) spec.labels.emplace(indexed('z', i), next++);
    return spec;
}

Graph assemble(const ConstructionSpec& spec) {
    Graph g(spec.n);
    for (const auto& [u, v] : kBaseEdges) g.add_edge(spec.at(u), spec.at(v));
    for (int i = 1; i <= spec.t - 3; ++i) {
        const Vertex a = spec.at(indexed('a', i));
        const Vertex b = spec.at(indexed('b', i));
        const Vertex c = spec.at(indexed('c', i));
        g.add_edge(a, b);
        g.add_edge(b, c);
        g.add_edge(spec.at("x1"), a);
        g.add_edge(spec.at("x2"), c);
    }
    if (spec.epsilon >= 1) g.add_edge(spec.at("y4"), spec.at("z1"));
    if (spec.epsilon == 2) {
        g.add_edge(spec.at("y4"), spec.at("z2"));
        g.add_edge(spec.at("z1"), spec.at("z2"));
    }
    return g;
}

}  // namespace

Vertex ConstructionSpec::at(std::string_view name) const {
    const auto it = labels.find(name);
    if (it == labels.end()) throw std::out_of_range("no vertex named " + std::string(name));
    return it->second;
}

std::string ConstructionSpec::name_of(Vertex v) const {
    for (const auto& [name, id] : labels)
        if (id == v) return name;
    throw std::out_of_range("no name for vertex " + std::to_string(v));
}

const Graph& build_g0() {
    static const Graph g0 = [] {
        Graph g = assemble(make_spec(9));
        if (g.edge_count() != 12 || !is_saturated(g, 6)) {
            throw std::logic_error("reconstructed G_0 is not a 12-edge C_6-saturated graph");
        }
        for (const auto& w : listed_witnesses(make_spec(9))) {
            Graph plus = g;
            plus.add_edge(w.non_edge.first, w.non_edge.second);
            if (!w.cycle.is_valid_in(plus)) throw std::logic_error("G_0 witness " + w.label + " is not a cycle");
        }
        return g;
    }();
    return g0;
}

std::pair<Graph, ConstructionSpec> build_construction(int n) {
    if (n < 9) throw std::invalid_argument("construction needs n >= 9, got " + std::to_string(n));
    if (n > kMaxVertices) throw std::invalid_argument("construction supports n <= 64");
    if (n == 9) return {build_g0(), make_spec(9)};
    ConstructionSpec spec = make_spec(n);
    Graph g = assemble(spec);
    return {std::move(g), std::move(spec)};
}

int upper_bound_edges(int n) {
    if (n < 9) throw std::invalid_argument("upper bound is stated for n >= 9");
    const int eps = n % 3;
    return (4 * n - eps) / 3 + eps * (eps - 1) / 2;
}

int lower_bound_edges(int n) { return (4 * n + 2) / 3 - 2; }

std::vector<ListedWitness> listed_witnesses(const ConstructionSpec& spec) {
    std::vector<ListedWitness> out;
    auto add = [&](std::string label, const std::vector<std::string>& names) {
        ListedWitness w;
        w.label = std::move(label);
        for (const auto& name : names) w.cycle.vertices.push_back(spec.at(name));
        w.cycle.kind = CyclePath::Kind::cycle;
        w.non_edge = std::minmax(w.cycle.vertices.front(), w.cycle.vertices.back());
        out.push_back(std::move(w));
    };
    auto nm = [](char c, int i) { return indexed(c, i); };

    for (int i = 0; i <= spec.t - 3; ++i) {
        for (int j = i + 1; j <= spec.t - 3; ++j) {
            const std::string pair = std::to_string(i) + "," + std::to_string(j);
            add("C6(a_i a_j) " + pair, {nm('a', i), nm('b', i), nm('c', i), "x2", "x1", nm('a', j)});
            add("C6(a_i b_j) " + pair, {nm('a', i), nm('b', i), nm('c', i), "x2", nm('c', j), nm('b', j)});
            add("C6(a_i c_j) " + pair, {nm('a', i), "x1", "y2", "y3", "x2", nm('c', j)});
            add("C6(b_i b_j) " + pair, {nm('b', i), nm('a', i), "x1", "x2", nm('c', j), nm('b', j)});
            add("C6(b_i c_j) " + pair, {nm('b', i), nm('a', i), "x1", nm('a', j), nm('b', j), nm('c', j)});
            add("C6(c_i c_j) " + pair, {nm('c', i), nm('b', i), nm('a', i), "x1", "x2", nm('c', j)});
        }
    }
    if (spec.epsilon >= 1) {
        add("C6(z1 x1)", {"z1", "y4", "x2", "y3", "y2", "x1"});
        add("C6(z1 y1)", {"z1", "y4", "x2", "y3", "y2", "y1"});
        add("C6(z1 c0)", {"z1", "y4", "y2", "x1", "x2", "c0"});
        add("C6(z1 y3)", {"z1", "y4", "y2", "x1", "x2", "y3"});
        add("C6(z1 x2)", {"z1", "y4", "y2", "y1", "x1", "x2"});
        add("C6(z1 a0)", {"z1", "y4", "y2", "y1", "x1", "a0"});
        add("C6(z1 y2)", {"z1", "y4", "x2", "x1", "y1", "y2"});
        add("C6(z1 b0)", {"z1", "y4", "x2", "x1", "a0", "b0"});
    }
    return out;
}

std::vector<int> ConstructionReport::failures() const {
    std::vector<int> out;
    for (const auto& row : rows)
        if (!row.ok()) out.push_back(row.n);
    return out;
}

std::string ConstructionReport::table() const {
    std::ostringstream os;
    os << "n\teps\tedges\tbound\tsaturated\n";
    for (const auto& r : rows)
        os << r.n << '\t' << r.epsilon << '\t' << r.edges << '\t' << r.bound << '\t'
           << (r.saturated ? "yes" : "NO") << '\n';
    return os.str();
}

ConstructionReport verify_construction(int first, int last) {
    if (first < 9 || last < first) throw std::invalid_argument("construction range must be non-empty with n >= 9");
    auto row_for = [](int n) {
        auto [g, spec] = build_construction(n);
        ConstructionRow row;
        row.n = n;
        row.epsilon = spec.epsilon;
        row.edges = g.edge_count();
        row.bound = upper_bound_edges(n);
        row.saturated = is_saturated(g, 6);
        return row;
    };
    build_g0();
    const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    ConstructionReport report;
    std::vector<std::future<ConstructionRow>> pending;
    for (int n = first; n <= last; ++n) {
        pending.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, row_for, n));
    }
    for (auto& f : pending) report.rows.push_back(f.get());
    return report;
}

}  // namespace satforge
