#include "indcover/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace indcover {

namespace {

void append_number(std::string& out, std::uint64_t x) {
    char buf[24];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    out.append(buf, end);
}

template <typename Range>
void append_list(std::string& out, const Range& values) {
    for (auto v : values) {
        out.push_back(' ');
        append_number(out, v);
    }
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        if (nl == std::string_view::npos) {
            lines.push_back(text);
            break;
        }
        lines.push_back(text.substr(0, nl));
        text.remove_prefix(nl + 1);
    }
    return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            words.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return words;
}

std::uint64_t parse_number(std::string_view word, std::string_view what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size()) {
        throw ParseError("malformed " + std::string(what) + ": '" + std::string(word) + "'");
    }
    return value;
}

// "key=<number>"
std::uint64_t parse_keyed(std::string_view word, std::string_view key) {
    if (word.size() <= key.size() + 1 || word.substr(0, key.size()) != key || word[key.size()] != '=') {
        throw ParseError("expected " + std::string(key) + "=<number>, got '" + std::string(word) + "'");
    }
    return parse_number(word.substr(key.size() + 1), key);
}

class LineReader {
  public:
    explicit LineReader(std::string_view text) : lines_(split_lines(text)) {}

    std::vector<std::string_view> expect(std::string_view head) {
        if (pos_ >= lines_.size()) {
            throw ParseError("missing '" + std::string(head) + "' line");
        }
        auto words = split_words(lines_[pos_++]);
        if (words.empty() || words.front() != head) {
            throw ParseError("expected '" + std::string(head) + "' on line " + std::to_string(pos_));
        }
        words.erase(words.begin());
        return words;
    }

    bool done() {
        while (pos_ < lines_.size() && split_words(lines_[pos_]).empty()) {
            ++pos_;
        }
        return pos_ >= lines_.size();
    }

    std::vector<std::string_view> next() { return split_words(lines_[pos_++]); }
    std::size_t line_number() const { return pos_; }

  private:
    std::vector<std::string_view> lines_;
    std::size_t pos_ = 0;
};

std::uint64_t single(const std::vector<std::string_view>& words, std::string_view what) {
    if (words.size() != 1) {
        throw ParseError("expected one value after '" + std::string(what) + "'");
    }
    return parse_number(words.front(), what);
}

}  // namespace

std::string write_ggf(const GeneralizedGraph& g) {
    std::string out = "ggf 1\nvertices ";
    append_number(out, g.num_vertices());
    out += "\ndarts ";
    append_number(out, g.num_darts());
    out += "\nincidence";
    append_list(out, g.incidence_map());
    out.push_back('\n');
    for (DartId x = 0; x < g.num_darts(); ++x) {
        const DartId y = g.mate(x);
        if (y == x) {
            out += "semi ";
            append_number(out, x);
            out.push_back('\n');
        } else if (x < y) {
            out += "pair ";
            append_number(out, x);
            out.push_back(' ');
            append_number(out, y);
            out.push_back('\n');
        }
    }
    return out;
}

GeneralizedGraph read_ggf(std::string_view text) {
    LineReader in(text);
    if (const auto v = in.expect("ggf"); v.size() != 1 || v.front() != "1") {
        throw ParseError("unsupported GGF version");
    }
    const auto n = single(in.expect("vertices"), "vertices");
    const auto m = single(in.expect("darts"), "darts");
    const auto inc_words = in.expect("incidence");
    if (inc_words.size() != m) {
        throw ParseError("incidence lists " + std::to_string(inc_words.size()) + " darts, expected " +
                         std::to_string(m));
    }
    std::vector<VertexId> incidence(m);
    for (std::size_t x = 0; x < m; ++x) {
        incidence[x] = static_cast<VertexId>(parse_number(inc_words[x], "incidence"));
        if (incidence[x] >= n) {
            throw ParseError("dart " + std::to_string(x) + " incident to missing vertex");
        }
    }

    constexpr DartId kUnset = ~DartId{0};
    std::vector<DartId> pairing(m, kUnset);
    std::uint64_t last_first = 0;
    bool any = false;
    while (!in.done()) {
        const auto words = in.next();
        const auto line = std::to_string(in.line_number());
        std::uint64_t i = 0;
        std::uint64_t j = 0;
        if (words.front() == "pair" && words.size() == 3) {
            i = parse_number(words[1], "dart");
            j = parse_number(words[2], "dart");
            if (i >= j) {
                throw ParseError("pair on line " + line + " must list the smaller dart first");
            }
        } else if (words.front() == "semi" && words.size() == 2) {
            i = j = parse_number(words[1], "dart");
        } else {
            throw ParseError("unexpected line " + line);
        }
        if (j >= m) {
            throw ParseError("dart out of range on line " + line);
        }
        if (any && i <= last_first) {
            throw ParseError("orbit lines out of order at line " + line);
        }
        if (pairing[i] != kUnset || pairing[j] != kUnset) {
            throw ParseError("dart listed twice on line " + line);
        }
        pairing[i] = static_cast<DartId>(j);
        pairing[j] = static_cast<DartId>(i);
        last_first = i;
        any = true;
    }
    if (const auto gap = std::find(pairing.begin(), pairing.end(), kUnset); gap != pairing.end()) {
        throw ParseError("dart " + std::to_string(gap - pairing.begin()) + " has no pair/semi line");
    }
    return GeneralizedGraph(n, std::move(incidence), std::move(pairing));
}

std::string write_cover(const CoverCertificate& c) {
    std::string out = "cover d=";
    append_number(out, c.d);
    out += " r=";
    append_number(out, c.r);
    out.push_back('\n');
    for (std::size_t i = 0; i < c.subset.size(); ++i) {
        if (i > 0) {
            out.push_back(' ');
        }
        append_number(out, c.subset[i]);
    }
    out.push_back('\n');
    return out;
}

CoverCertificate read_cover(std::string_view text) {
    LineReader in(text);
    const auto head = in.expect("cover");
    if (head.size() != 2) {
        throw ParseError("cover header needs d= and r=");
    }
    CoverCertificate c;
    c.d = parse_keyed(head[0], "d");
    c.r = parse_keyed(head[1], "r");
    while (!in.done()) {
        for (auto w : in.next()) {
            c.subset.push_back(static_cast<VertexId>(parse_number(w, "vertex")));
        }
    }
    if (!std::is_sorted(c.subset.begin(), c.subset.end()) ||
        std::adjacent_find(c.subset.begin(), c.subset.end()) != c.subset.end()) {
        throw ParseError("cover vertices must be strictly increasing");
    }
    return c;
}

std::string write_edges(const GeneralizedGraph& g) {
    if (!classify(g).simple()) {
        throw GraphError("edges export needs a simple graph");
    }
    std::string out;
    for (auto [u, v] : ordinary_edges(g)) {
        append_number(out, u);
        out.push_back(' ');
        append_number(out, v);
        out.push_back('\n');
    }
    return out;
}

GeneralizedGraph read_edges(std::string_view text, std::optional<std::size_t> n) {
    std::vector<VertexPair> edges;
    std::size_t top = 0;
    for (auto line : split_lines(text)) {
        const auto words = split_words(line);
        if (words.empty()) {
            continue;
        }
        if (words.size() != 2) {
            throw ParseError("edge lines need exactly two vertex ids");
        }
        const auto u = static_cast<VertexId>(parse_number(words[0], "vertex"));
        const auto v = static_cast<VertexId>(parse_number(words[1], "vertex"));
        if (u == v) {
            throw ParseError("edges format cannot express loops");
        }
        edges.emplace_back(u, v);
        top = std::max<std::size_t>(top, std::max(u, v) + std::size_t{1});
    }
    const std::size_t count = n.value_or(top);
    if (count < top) {
        throw ParseError("edge endpoint exceeds the given vertex count");
    }
    return from_edges(count, edges);
}

std::string write_covmap(const CoveringMap& cm) {
    std::string out = "covmap ";
    append_number(out, cm.dart_map.size());
    out += "\ndartmap";
    append_list(out, cm.dart_map);
    out.push_back('\n');
    return out;
}

std::vector<DartId> read_covmap(std::string_view text) {
    LineReader in(text);
    const auto m = single(in.expect("covmap"), "covmap");
    const auto words = in.expect("dartmap");
    if (words.size() != m) {
        throw ParseError("dartmap has wrong length");
    }
    std::vector<DartId> map(m);
    for (std::size_t i = 0; i < m; ++i) {
        map[i] = static_cast<DartId>(parse_number(words[i], "dart"));
    }
    return map;
}

std::string write_factorization(const Factorization& f) {
    std::string out = "factor a=";
    append_number(out, f.a);
    out += " b=";
    append_number(out, f.b);
    out += "\ncolor";
    append_list(out, f.color);
    out += "\nforward";
    std::string bits;
    for (std::size_t x = 0; x < f.color.size(); ++x) {
        if (f.color[x] >= f.a) {
            bits.push_back(f.forward[x] ? '1' : '0');
        }
    }
    if (!bits.empty()) {
        out.push_back(' ');
        out += bits;
    }
    out.push_back('\n');
    return out;
}

Factorization read_factorization(std::string_view text) {
    LineReader in(text);
    const auto head = in.expect("factor");
    if (head.size() != 2) {
        throw ParseError("factor header needs a= and b=");
    }
    Factorization f;
    f.a = parse_keyed(head[0], "a");
    f.b = parse_keyed(head[1], "b");
    for (auto w : in.expect("color")) {
        f.color.push_back(static_cast<std::uint32_t>(parse_number(w, "colour")));
    }
    const auto fw = in.expect("forward");
    const std::string_view bits = fw.empty() ? std::string_view{} : fw.front();
    if (fw.size() > 1) {
        throw ParseError("forward bits must be one word");
    }
    f.forward.assign(f.color.size(), 0);
    std::size_t k = 0;
    for (std::size_t x = 0; x < f.color.size(); ++x) {
        if (f.color[x] < f.a) {
            continue;
        }
        if (k >= bits.size() || (bits[k] != '0' && bits[k] != '1')) {
            throw ParseError("forward bitstring too short or malformed");
        }
        f.forward[x] = bits[k++] == '1' ? 1 : 0;
    }
    if (k != bits.size()) {
        throw ParseError("forward bitstring too long");
    }
    return f;
}

std::vector<VertexId> read_vertex_list(std::string_view text) {
    std::vector<VertexId> out;
    for (auto line : split_lines(text)) {
        for (auto w : split_words(line)) {
            out.push_back(static_cast<VertexId>(parse_number(w, "vertex")));
        }
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

}  // namespace indcover
