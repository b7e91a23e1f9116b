#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "lapcs/errors.hpp"
#include "lapcs/harness.hpp"

namespace lapcs {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    // "abc\n" ends in an empty fragment that is not a line of its own.
    if (!lines.empty() && lines.back().empty() && !text.empty() && text.back() == '\n')
        lines.pop_back();
    return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r' || c == '\n'; }

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t p = 0;
    while (p < line.size()) {
        while (p < line.size() && is_space(line[p]))
            ++p;
        const std::size_t start = p;
        while (p < line.size() && !is_space(line[p]))
            ++p;
        if (p > start)
            out.push_back(line.substr(start, p - start));
    }
    return out;
}

bool blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), is_space);
}

long long parse_int(std::string_view token, std::size_t line_no, const char* what) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line_no, std::string("expected integer ") + what + ", got '" + std::string(token) + "'");
    return value;
}

}  // namespace

AnnotatedSequence parse_annotated(std::string_view text) {
    const auto lines = split_lines(text);
    std::string seq;
    bool have_seq = false;
    std::vector<Arc> arcs;

    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const std::size_t line_no = idx + 1;
        const std::string_view line = lines[idx];
        if (!line.empty() && line.front() == '#')
            continue;
        if (!have_seq) {
            if (std::any_of(line.begin(), line.end(), is_space))
                throw ParseError(line_no, "sequence line contains whitespace");
            seq = std::string(line);
            have_seq = true;
            continue;
        }
        if (blank(line))
            continue;
        const auto tok = tokens(line);
        if (tok.size() != 2)
            throw ParseError(line_no, "arc line must be two integers 'i j'");
        const long long a = parse_int(tok[0], line_no, "arc endpoint");
        const long long b = parse_int(tok[1], line_no, "arc endpoint");
        const long long n = static_cast<long long>(seq.size());
        if (a < 1 || b < 1 || a > n || b > n)
            throw ParseError(line_no, "arc endpoint outside 1.." + std::to_string(n));
        if (a == b)
            throw ParseError(line_no, "arc joins position " + std::to_string(a) + " to itself");
        arcs.push_back({static_cast<Pos>(a), static_cast<Pos>(b)});
    }
    return AnnotatedSequence(std::move(seq), std::move(arcs));
}

std::string write_annotated(const AnnotatedSequence& a) {
    if (!a.seq().empty() && a.seq().front() == '#')
        throw ValidationError("sequence starting with '#' cannot be written");
    if (std::any_of(a.seq().begin(), a.seq().end(), is_space))
        throw ValidationError("sequence containing whitespace cannot be written");
    std::ostringstream out;
    out << a.seq() << '\n';
    for (const Arc& arc : a.arcs())
        out << arc.first << ' ' << arc.second << '\n';
    return out.str();
}

Graph parse_dimacs(std::string_view text) {
    const auto lines = split_lines(text);
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const std::size_t line_no = idx + 1;
        const std::string_view line = lines[idx];
        if (blank(line) || line.front() == 'c')
            continue;
        const auto tok = tokens(line);
        if (tok[0] == "p") {
            if (have_header)
                throw ParseError(line_no, "second problem line");
            if (tok.size() != 4 || tok[1] != "edge")
                throw ParseError(line_no, "problem line must be 'p edge n m'");
            n = parse_int(tok[2], line_no, "vertex count");
            m = parse_int(tok[3], line_no, "edge count");
            if (n < 0 || m < 0 || n > 1'000'000)
                throw ParseError(line_no, "vertex/edge counts out of range");
            have_header = true;
        } else if (tok[0] == "e") {
            if (!have_header)
                throw ParseError(line_no, "edge before problem line");
            if (tok.size() != 3)
                throw ParseError(line_no, "edge line must be 'e i j'");
            long long a = parse_int(tok[1], line_no, "vertex");
            long long b = parse_int(tok[2], line_no, "vertex");
            if (a < 1 || b < 1 || a > n || b > n)
                throw ParseError(line_no, "vertex outside 1.." + std::to_string(n));
            if (static_cast<long long>(edges.size()) == m)
                throw ParseError(line_no, "more than the declared " + std::to_string(m) + " edges");
            if (a == b)
                throw InvalidInputError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(a));
            if (a > b)
                std::swap(a, b);
            const Edge e{static_cast<Vertex>(a), static_cast<Vertex>(b)};
            if (!seen.insert(e).second)
                throw InvalidInputError("line " + std::to_string(line_no) + ": repeated edge {" + std::to_string(a) +
                                        "," + std::to_string(b) + "}");
            edges.push_back(e);
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!have_header)
        throw ParseError(lines.size(), "missing 'p edge n m' line");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lines.size(), "declared " + std::to_string(m) + " edges, read " + std::to_string(edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges())
        out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot write " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw Error("failed writing " + path);
}

}  // namespace lapcs
