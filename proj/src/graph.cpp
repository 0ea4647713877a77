#include "zagreb/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "zagreb/errors.hpp"

namespace zagreb {

Graph::Graph(int n) : n_(n), m_(0), adj_() {
    if (n < 1) throw HypothesisError("graph order must be >= 1");
    adj_.assign(static_cast<std::size_t>(n) * n, false);
}

std::size_t Graph::idx(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
}

void Graph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw HypothesisError("vertex out of range");
    if (i == j) throw ParseError("loop not allowed");
    if (adj_[idx(i, j)]) return;
    adj_[idx(i, j)] = true;
    adj_[idx(j, i)] = true;
    ++m_;
}

int Graph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (adj_[idx(v, u)]) ++d;
    return d;
}

Graph Graph::complement() const {
    Graph c(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (!adjacent(i, j)) c.add_edge(i, j);
    return c;
}

bool Graph::connected() const {
    std::vector<bool> seen(n_, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n_; ++u) {
            if (adjacent(v, u) && !seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n_;
}

std::uint64_t Graph::edge_mask() const {
    std::uint64_t mask = 0;
    int bit = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j, ++bit) {
            if (adjacent(i, j)) mask |= std::uint64_t{1} << bit;
        }
    }
    return mask;
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if (mask >> bit & 1) g.add_edge(i, j);
        }
    }
    return g;
}

DegreeSequence::DegreeSequence(const Graph& g) {
    d_.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) d_.push_back(g.degree(v));
    std::sort(d_.rbegin(), d_.rend());
}

DegreeSequence::DegreeSequence(std::vector<int> sorted_desc) : d_(std::move(sorted_desc)) {
    if (d_.empty()) throw HypothesisError("empty degree sequence");
    if (!std::is_sorted(d_.rbegin(), d_.rend()))
        throw HypothesisError("degree sequence not sorted non-increasing");
}

int DegreeSequence::at(int pos) const {
    if (pos < 1 || pos > n()) throw HypothesisError("degree position out of range");
    return d_[pos - 1];
}

int DegreeSequence::degree_sum() const {
    return std::accumulate(d_.begin(), d_.end(), 0);
}

bool gamma_member(const DegreeSequence& ds, int i, int j) {
    if (i >= j) return true;
    if (i < 1 || j > ds.n()) throw HypothesisError("gamma class index out of range");
    for (int p = i; p < j; ++p)
        if (ds.at(p) != ds.at(p + 1)) return false;
    return true;
}

bool gamma_member_strict(const DegreeSequence& ds, int i, int j) {
    if (i < 1 || i >= j || j > ds.n())
        throw HypothesisError("gamma class requires 1 <= i < j <= n");
    return gamma_member(ds, i, j);
}

namespace {

long parse_label(const std::string& tok) {
    std::size_t pos = 0;
    long v;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("not an integer: '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("not an integer: '" + tok + "'");
    return v;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<long, long>> edges;
    long declared_n = -1;
    long max_label = 0;
    std::istringstream in(text);
    std::string line;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a) || a[0] == '#') continue;
        if (first_content_line && a == "n") {
            if (!(ls >> b)) throw ParseError("header 'n' without a count");
            declared_n = parse_label(b);
            if (declared_n < 1) throw ParseError("vertex count must be >= 1");
            first_content_line = false;
            continue;
        }
        first_content_line = false;
        if (!(ls >> b)) throw ParseError("edge line needs two labels: '" + line + "'");
        if (ls >> extra && extra[0] != '#')
            throw ParseError("trailing token on edge line: '" + extra + "'");
        long u = parse_label(a);
        long v = parse_label(b);
        if (u < 1 || v < 1) throw ParseError("vertex labels are positive, 1-based");
        if (u == v) throw ParseError("loop not allowed");
        max_label = std::max({max_label, u, v});
        edges.emplace_back(u, v);
    }
    long n = declared_n >= 0 ? declared_n : max_label;
    if (n < 1) throw ParseError("no vertices");
    if (declared_n >= 0 && max_label > declared_n)
        throw ParseError("vertex label exceeds declared n");
    Graph g(static_cast<int>(n));
    for (auto [u, v] : edges) g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(i, j)) out << i + 1 << ' ' << j + 1 << '\n';
    return out.str();
}

// graph6: 6-bit bytes offset by 63; N(n) header; upper triangle streamed
// column-major, i.e. x(0,1), x(0,2), x(1,2), x(0,3), ...
namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;

void check_byte(char c) {
    if (c < kG6Lo || c > kG6Hi)
        throw ParseError("byte outside graph6 range: '" + std::string(1, c) + "'");
}

}  // namespace

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s.erase(0, 10);
    if (s.empty()) throw ParseError("empty graph6 line");

    std::size_t pos = 0;
    long n;
    check_byte(s[0]);
    if (s[0] != 126) {
        n = s[0] - kG6Lo;
        pos = 1;
    } else if (s.size() >= 2 && s[1] != 126) {
        if (s.size() < 4) throw ParseError("truncated graph6 header");
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            check_byte(s[i]);
            n = n << 6 | (s[i] - kG6Lo);
        }
        pos = 4;
    } else {
        if (s.size() < 8) throw ParseError("truncated graph6 header");
        n = 0;
        for (int i = 2; i <= 7; ++i) {
            check_byte(s[i]);
            n = n << 6 | (s[i] - kG6Lo);
        }
        pos = 8;
    }
    if (n < 1) throw ParseError("graph6 order must be >= 1");
    if (n > 100000) throw CapacityError("graph6 order too large for this tool");

    long bits = n * (n - 1) / 2;
    long need = (bits + 5) / 6;
    if (static_cast<long>(s.size() - pos) < need)
        throw ParseError("truncated graph6 bitstream");
    if (static_cast<long>(s.size() - pos) > need)
        throw ParseError("trailing bytes after graph6 bitstream");

    Graph g(static_cast<int>(n));
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            char c = s[pos + bit / 6];
            check_byte(c);
            int val = c - kG6Lo;
            if (val >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    }
    // canonical padding: remaining bits of the last byte must be zero
    if (bits % 6 != 0) {
        int val = s[pos + (bits - 1) / 6] - kG6Lo;
        int pad = static_cast<int>(6 - bits % 6);
        if (val & ((1 << pad) - 1))
            throw ParseError("nonzero padding bits in graph6 stream");
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    std::string s;
    long n = g.order();
    if (n <= 62) {
        s.push_back(static_cast<char>(n + kG6Lo));
    } else if (n <= 258047) {
        s.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            s.push_back(static_cast<char>((n >> shift & 63) + kG6Lo));
    } else {
        s.push_back(126);
        s.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            s.push_back(static_cast<char>((n >> shift & 63) + kG6Lo));
    }
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                s.push_back(static_cast<char>(acc + kG6Lo));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) s.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Lo));
    return s;
}

}  // namespace zagreb
