// Copyright 2026 graphweaver Contributors
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

#include "graphweaver/graph_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "graphweaver/errors.hpp"

namespace gw {

std::uint64_t GraphSpec::edge_key(std::size_t a, std::size_t b) {
    if (a > b)
        std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

std::size_t GraphSpec::add_vertex(const VertexId &id) {
    if (id.empty())
        throw GraphError("vertex id must be non-empty");
    auto it = index_.find(id);
    if (it != index_.end())
        return it->second;
    std::size_t idx = vertices_.size();
    vertices_.push_back(id);
    adjacency_.emplace_back();
    index_.emplace(id, idx);
    return idx;
}

void GraphSpec::add_edge(const VertexId &u, const VertexId &v) {
    auto iu = index_of(u);
    auto iv = index_of(v);
    if (!iu || !iv)
        throw GraphError("edge (" + u + ", " + v + ") has an undeclared endpoint");
    if (*iu == *iv)
        throw GraphError("self-loop on vertex " + u);
    auto key = edge_key(*iu, *iv);
    if (edge_index_.contains(key))
        throw GraphError("duplicate edge (" + u + ", " + v + ")");
    edge_index_.emplace(key, edges_.size());
    edges_.push_back({u, v});
    adjacency_[*iu].push_back(*iv);
    adjacency_[*iv].push_back(*iu);
}

bool GraphSpec::has_vertex(std::string_view id) const { return index_.contains(std::string(id)); }

bool GraphSpec::has_edge(std::string_view u, std::string_view v) const {
    auto iu = index_of(u);
    auto iv = index_of(v);
    if (!iu || !iv)
        return false;
    return edge_index_.contains(edge_key(*iu, *iv));
}

std::optional<std::size_t> GraphSpec::index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> GraphSpec::canonical_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edges_.size());
    for (const auto &e : edges_) {
        std::size_t a = *index_of(e.u);
        std::size_t b = *index_of(e.v);
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> GraphSpec::component_labels() const {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(vertices_.size(), unset);
    std::size_t next = 0;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < vertices_.size(); s++) {
        if (label[s] != unset)
            continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y : adjacency_[x]) {
                if (label[y] == unset) {
                    label[y] = next;
                    stack.push_back(y);
                }
            }
        }
        next++;
    }
    return label;
}

std::string GraphSpec::hash() const {
    std::uint64_t h = 14695981039346656037ull;
    auto feed = [&h](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto &v : vertices_) {
        feed("v:");
        feed(v);
        feed("\n");
    }
    for (auto [a, b] : canonical_edges()) {
        feed("e:");
        feed(vertices_[a]);
        feed("|");
        feed(vertices_[b]);
        feed("\n");
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

std::string coord(std::initializer_list<std::size_t> parts) {
    std::string out;
    for (std::size_t p : parts) {
        if (!out.empty())
            out += '.';
        out += std::to_string(p);
    }
    return out;
}

void require_positive(std::size_t d, const char *what) {
    if (d == 0)
        throw GraphError(std::string("invalid dimension: ") + what + " must be >= 1");
}

}  // namespace

GraphSpec make_lattice(const LatticeKind &kind) {
    GraphSpec g;
    if (const auto *sq = std::get_if<Square>(&kind)) {
        require_positive(sq->rows, "rows");
        require_positive(sq->cols, "cols");
        for (std::size_t r = 0; r < sq->rows; r++)
            for (std::size_t c = 0; c < sq->cols; c++)
                g.add_vertex(coord({r, c}));
        for (std::size_t r = 0; r < sq->rows; r++) {
            for (std::size_t c = 0; c < sq->cols; c++) {
                if (c + 1 < sq->cols)
                    g.add_edge(coord({r, c}), coord({r, c + 1}));
                if (r + 1 < sq->rows)
                    g.add_edge(coord({r, c}), coord({r + 1, c}));
            }
        }
    } else if (const auto *hc = std::get_if<Honeycomb>(&kind)) {
        require_positive(hc->rows, "rows");
        require_positive(hc->cols, "cols");
        for (std::size_t r = 0; r < hc->rows; r++)
            for (std::size_t c = 0; c < hc->cols; c++)
                g.add_vertex(coord({r, c}));
        for (std::size_t r = 0; r < hc->rows; r++) {
            for (std::size_t c = 0; c < hc->cols; c++) {
                if (c + 1 < hc->cols)
                    g.add_edge(coord({r, c}), coord({r, c + 1}));
                if (r + 1 < hc->rows && (r + c) % 2 == 0)
                    g.add_edge(coord({r, c}), coord({r + 1, c}));
            }
        }
    } else {
        const auto &cu = std::get<Cubic>(kind);
        require_positive(cu.n, "n");
        std::size_t n = cu.n;
        for (std::size_t x = 0; x < n; x++)
            for (std::size_t y = 0; y < n; y++)
                for (std::size_t z = 0; z < n; z++)
                    g.add_vertex(coord({x, y, z}));
        for (std::size_t x = 0; x < n; x++) {
            for (std::size_t y = 0; y < n; y++) {
                for (std::size_t z = 0; z < n; z++) {
                    if (z + 1 < n)
                        g.add_edge(coord({x, y, z}), coord({x, y, z + 1}));
                    if (y + 1 < n)
                        g.add_edge(coord({x, y, z}), coord({x, y + 1, z}));
                    if (x + 1 < n)
                        g.add_edge(coord({x, y, z}), coord({x + 1, y, z}));
                }
            }
        }
    }
    return g;
}

std::size_t lattice_edge_count(const LatticeKind &kind) {
    if (const auto *sq = std::get_if<Square>(&kind)) {
        require_positive(sq->rows, "rows");
        require_positive(sq->cols, "cols");
        return sq->rows * (sq->cols - 1) + sq->cols * (sq->rows - 1);
    }
    if (const auto *hc = std::get_if<Honeycomb>(&kind)) {
        require_positive(hc->rows, "rows");
        require_positive(hc->cols, "cols");
        // Row r contributes ceil(cols/2) vertical bonds when r is even, floor otherwise.
        std::size_t vertical = 0;
        for (std::size_t r = 0; r + 1 < hc->rows; r++)
            vertical += (r % 2 == 0) ? (hc->cols + 1) / 2 : hc->cols / 2;
        return hc->rows * (hc->cols - 1) + vertical;
    }
    std::size_t n = std::get<Cubic>(kind).n;
    require_positive(n, "n");
    return 3 * n * n * (n - 1);
}

namespace {

std::size_t parse_dimension(std::string_view s, std::string_view full) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw GraphError("malformed lattice dimension in '" + std::string(full) + "'");
    return value;
}

std::pair<std::size_t, std::size_t> parse_rc(std::string_view s, std::string_view full) {
    auto x = s.find_first_of("xX");
    if (x == std::string_view::npos)
        throw GraphError("expected RxC in '" + std::string(full) + "'");
    return {parse_dimension(s.substr(0, x), full), parse_dimension(s.substr(x + 1), full)};
}

}  // namespace

LatticeKind parse_lattice(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw GraphError("lattice must look like square:RxC, honeycomb:RxC or cubic:N, got '" +
                         std::string(text) + "'");
    auto name = text.substr(0, colon);
    auto dims = text.substr(colon + 1);
    if (name == "square") {
        auto [r, c] = parse_rc(dims, text);
        return Square{r, c};
    }
    if (name == "honeycomb") {
        auto [r, c] = parse_rc(dims, text);
        return Honeycomb{r, c};
    }
    if (name == "cubic")
        return Cubic{parse_dimension(dims, text)};
    throw GraphError("unknown lattice kind '" + std::string(name) + "'");
}

std::string lattice_name(const LatticeKind &kind) {
    if (const auto *sq = std::get_if<Square>(&kind))
        return "square:" + std::to_string(sq->rows) + "x" + std::to_string(sq->cols);
    if (const auto *hc = std::get_if<Honeycomb>(&kind))
        return "honeycomb:" + std::to_string(hc->rows) + "x" + std::to_string(hc->cols);
    return "cubic:" + std::to_string(std::get<Cubic>(kind).n);
}

GraphSpec parse_edge_list(std::string_view text) {
    GraphSpec g;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;)
            tokens.push_back(tok);
        if (tokens.empty())
            continue;
        if (tokens.size() > 2)
            throw ParseError("expected 'u v', got " + std::to_string(tokens.size()) + " tokens", line_no);
        if (tokens.size() == 1) {
            g.add_vertex(tokens[0]);
            continue;
        }
        if (tokens[0] == tokens[1])
            throw ParseError("self-loop on vertex " + tokens[0], line_no);
        g.add_vertex(tokens[0]);
        g.add_vertex(tokens[1]);
        if (g.has_edge(tokens[0], tokens[1]))
            throw ParseError("duplicate edge (" + tokens[0] + ", " + tokens[1] + ")", line_no);
        g.add_edge(tokens[0], tokens[1]);
    }
    return g;
}

std::string to_edge_list(const GraphSpec &g) {
    std::string out;
    std::vector<bool> touched(g.num_vertices(), false);
    for (const auto &e : g.edges()) {
        touched[*g.index_of(e.u)] = true;
        touched[*g.index_of(e.v)] = true;
    }
    // Isolated vertices go first so the vertex order survives a round trip
    // only up to reordering of isolated ids; edge sets are always preserved.
    for (std::size_t i = 0; i < g.num_vertices(); i++)
        if (!touched[i])
            out += g.vertices()[i] + "\n";
    for (const auto &e : g.edges())
        out += e.u + " " + e.v + "\n";
    return out;
}

std::vector<VertexId> odd_degree_vertices(const GraphSpec &g) {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < g.num_vertices(); i++)
        if (g.degree(i) % 2 == 1)
            out.push_back(g.vertices()[i]);
    return out;
}

namespace {

bool is_bare_dot_id(std::string_view s) {
    if (s.empty())
        return false;
    bool ident = !std::isdigit(static_cast<unsigned char>(s[0]));
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            ident = false;
    if (ident)
        return true;
    // DOT numeral: -?(.[0-9]+ | [0-9]+(.[0-9]*)?)
    std::size_t i = 0;
    if (s[i] == '-')
        i++;
    std::size_t digits = 0;
    bool dot = false;
    for (; i < s.size(); i++) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits++;
        } else if (s[i] == '.' && !dot) {
            dot = true;
        } else {
            return false;
        }
    }
    return digits > 0;
}

std::string dot_id(std::string_view s) {
    if (is_bare_dot_id(s))
        return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

struct DotToken {
    enum Kind { Id, Punct, End } kind;
    std::string text;
    std::size_t line;
};

std::vector<DotToken> tokenize_dot(std::string_view text) {
    std::vector<DotToken> out;
    std::size_t line = 1;
    std::size_t i = 0;
    auto bare = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
               static_cast<unsigned char>(c) >= 0x80;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            line++;
            i++;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            i++;
        } else if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
            while (i < text.size() && text[i] != '\n')
                i++;
        } else if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
            i += 2;
            while (i + 1 < text.size() && !(text[i] == '*' && text[i + 1] == '/')) {
                if (text[i] == '\n')
                    line++;
                i++;
            }
            i += 2;
        } else if (c == '-' && i + 1 < text.size() && (text[i + 1] == '-' || text[i + 1] == '>')) {
            if (text[i + 1] == '>')
                throw ParseError("directed edge '->' in undirected graph", line);
            out.push_back({DotToken::Punct, "--", line});
            i += 2;
        } else if (c == '"') {
            std::string s;
            std::size_t start_line = line;
            i++;
            while (i < text.size() && text[i] != '"') {
                if (text[i] == '\\' && i + 1 < text.size() && (text[i + 1] == '"' || text[i + 1] == '\\'))
                    i++;
                if (text[i] == '\n')
                    line++;
                s += text[i++];
            }
            if (i >= text.size())
                throw ParseError("unterminated string", start_line);
            i++;
            out.push_back({DotToken::Id, s, start_line});
        } else if (std::string_view("{}[];,=").find(c) != std::string_view::npos) {
            out.push_back({DotToken::Punct, std::string(1, c), line});
            i++;
        } else if (bare(c)) {
            std::string s;
            while (i < text.size() && bare(text[i])) {
                if (text[i] == '-' && i + 1 < text.size() && (text[i + 1] == '-' || text[i + 1] == '>'))
                    break;
                s += text[i++];
            }
            out.push_back({DotToken::Id, s, line});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line);
        }
    }
    out.push_back({DotToken::End, "", line});
    return out;
}

}  // namespace

std::string to_dot(const GraphSpec &g) {
    std::string out = "graph {\n";
    for (const auto &v : g.vertices())
        out += "  " + dot_id(v) + ";\n";
    for (const auto &e : g.edges())
        out += "  " + dot_id(e.u) + " -- " + dot_id(e.v) + ";\n";
    out += "}\n";
    return out;
}

GraphSpec parse_dot(std::string_view text) {
    auto toks = tokenize_dot(text);
    std::size_t pos = 0;
    auto peek = [&]() -> const DotToken & { return toks[pos]; };
    auto is_punct = [&](std::string_view p) { return peek().kind == DotToken::Punct && peek().text == p; };
    auto expect_punct = [&](std::string_view p) {
        if (!is_punct(p))
            throw ParseError("expected '" + std::string(p) + "'", peek().line);
        pos++;
    };
    auto skip_attrs = [&]() {
        while (is_punct("[")) {
            while (peek().kind != DotToken::End && !is_punct("]"))
                pos++;
            expect_punct("]");
        }
    };

    if (peek().kind == DotToken::Id && peek().text == "strict")
        pos++;
    if (peek().kind != DotToken::Id || peek().text != "graph")
        throw ParseError(peek().kind == DotToken::Id && peek().text == "digraph" ? "digraph is not supported"
                                                                                 : "expected 'graph'",
                         peek().line);
    pos++;
    if (peek().kind == DotToken::Id)
        pos++;
    expect_punct("{");

    GraphSpec g;
    while (!is_punct("}")) {
        if (peek().kind == DotToken::End)
            throw ParseError("missing '}'", peek().line);
        if (is_punct(";") || is_punct(",")) {
            pos++;
            continue;
        }
        if (peek().kind != DotToken::Id)
            throw ParseError("unexpected '" + peek().text + "'", peek().line);
        const DotToken &first = peek();
        if (first.text == "node" || first.text == "edge" || first.text == "graph") {
            pos++;
            skip_attrs();
            continue;
        }
        pos++;
        if (is_punct("=")) {
            pos++;
            pos++;
            continue;
        }
        std::vector<std::pair<std::string, std::size_t>> chain{{first.text, first.line}};
        while (is_punct("--")) {
            pos++;
            if (peek().kind != DotToken::Id)
                throw ParseError("expected vertex after '--'", peek().line);
            chain.emplace_back(peek().text, peek().line);
            pos++;
        }
        skip_attrs();
        for (const auto &[id, ln] : chain)
            g.add_vertex(id);
        for (std::size_t k = 0; k + 1 < chain.size(); k++) {
            const auto &[u, ln] = chain[k + 1];
            if (chain[k].first == u)
                throw ParseError("self-loop on vertex " + u, ln);
            if (g.has_edge(chain[k].first, u))
                throw ParseError("duplicate edge (" + chain[k].first + ", " + u + ")", ln);
            g.add_edge(chain[k].first, u);
        }
    }
    return g;
}

}  // namespace gw
