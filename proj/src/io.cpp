#include "ramsey/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace ramsey {

namespace {

struct LineReader {
    std::istream& in;
    int lineno = 0;

    // next non-comment line; comments allowed only after line 1
    bool next(std::string& out) {
        while (std::getline(in, out)) {
            ++lineno;
            if (!out.empty() && out.back() == '\r') out.pop_back();
            if (lineno > 1 && !out.empty() && out[0] == '#') continue;
            return true;
        }
        return false;
    }
};

int parse_int(const std::string& s, int lineno, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(lineno, "bad " + what + " value '" + s + "'");
    }
}

// key=value tokens separated by single spaces
std::string field(const std::string& line, const std::string& key, int lineno,
                  bool required) {
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok.rfind(key + "=", 0) == 0) return tok.substr(key.size() + 1);
    }
    if (required) throw ParseError(lineno, "missing field " + key + "=");
    return {};
}

Targets parse_targets(const std::string& s, int lineno) {
    Targets t;
    std::istringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
        t.push_back(parse_int(part, lineno, "targets"));
    if (t.empty()) throw ParseError(lineno, "empty targets list");
    return t;
}

std::vector<std::uint8_t> parse_digits(const std::string& line, std::size_t want,
                                       int r, int lineno) {
    if (line.size() != want)
        throw ParseError(lineno, "expected " + std::to_string(want) +
                                     " digits, got " + std::to_string(line.size()));
    std::vector<std::uint8_t> out(want);
    for (std::size_t i = 0; i < want; ++i) {
        char ch = line[i];
        if (ch < '1' || ch > '9')
            throw ParseError(lineno, std::string("invalid color digit '") + ch + "'");
        int c = ch - '0';
        if (c > r)
            throw ParseError(lineno, "color " + std::to_string(c) +
                                         " out of range for r=" + std::to_string(r));
        out[i] = static_cast<std::uint8_t>(c);
    }
    return out;
}

} // namespace

ColoringFile read_coloring(std::istream& in) {
    LineReader rd{in};
    std::string line;
    if (!rd.next(line)) throw ParseError(1, "empty file");
    std::istringstream head(line);
    std::string magic, version, kind;
    head >> magic >> version >> kind;
    if (magic != "ramsey" || version != "v1")
        throw ParseError(1, "not a ramsey v1 file");
    if (kind != "edges" && kind != "circulant" && kind != "blocks")
        throw ParseError(1, "unknown kind '" + kind + "'");

    if (!rd.next(line)) throw ParseError(rd.lineno + 1, "missing header line 2");
    int n = parse_int(field(line, "n", rd.lineno, true), rd.lineno, "n");
    int r = parse_int(field(line, "r", rd.lineno, true), rd.lineno, "r");
    if (n < 2) throw ParseError(rd.lineno, "n must be >= 2");
    if (r < 1 || r > 9) throw ParseError(rd.lineno, "r must be in 1..9");
    ColoringFile file;
    std::string tgt = field(line, "targets", rd.lineno, false);
    if (!tgt.empty()) {
        Targets t = parse_targets(tgt, rd.lineno);
        if (static_cast<int>(t.size()) != r)
            throw ParseError(rd.lineno, "targets length does not match r");
        file.targets = t;
    }

    if (kind == "circulant") {
        if (!rd.next(line)) throw ParseError(rd.lineno + 1, "missing digit line");
        auto vals = parse_digits(line, static_cast<std::size_t>(n / 2), r, rd.lineno);
        file.vec = ColoringVector(Shape::circulant(n), r, std::move(vals));
    } else if (kind == "blocks") {
        if (!rd.next(line)) throw ParseError(rd.lineno + 1, "missing blocks header");
        int m = parse_int(field(line, "m", rd.lineno, true), rd.lineno, "m");
        int sym = parse_int(field(line, "sym", rd.lineno, true), rd.lineno, "sym");
        if (m < 2 || n % m != 0)
            throw ParseError(rd.lineno, "m must divide n and be >= 2");
        if (sym != 0 && sym != 1) throw ParseError(rd.lineno, "sym must be 0 or 1");
        int d = n / m;
        Shape shape = Shape::block_circulant(m, d, sym == 1);
        std::vector<std::uint8_t> vals;
        vals.reserve(shape.vector_length());
        for (int p = 0; p < m; ++p)
            for (int q = p; q < m; ++q) {
                std::size_t width =
                    p == q ? static_cast<std::size_t>(d / 2)
                           : (sym ? static_cast<std::size_t>(d / 2 + 1)
                                  : static_cast<std::size_t>(d));
                if (!rd.next(line))
                    throw ParseError(rd.lineno + 1, "missing block digit line");
                auto row = parse_digits(line, width, r, rd.lineno);
                vals.insert(vals.end(), row.begin(), row.end());
            }
        file.vec = ColoringVector(shape, r, std::move(vals));
    } else { // edges
        EdgeColoring col(n, r);
        for (int u = 0; u < n - 1; ++u) {
            if (!rd.next(line))
                throw ParseError(rd.lineno + 1, "missing edge digit line");
            auto row = parse_digits(line, static_cast<std::size_t>(n - 1 - u), r,
                                    rd.lineno);
            for (int v = u + 1; v < n; ++v)
                col.set_color(u, v, row[v - u - 1]);
        }
        file.edges = col;
    }
    if (rd.next(line) && !line.empty())
        throw ParseError(rd.lineno, "trailing content");
    return file;
}

ColoringFile read_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_coloring(in);
}

void write_coloring(const ColoringFile& file, std::ostream& out) {
    auto digits = [](const std::uint8_t* v, std::size_t count) {
        std::string s(count, '0');
        for (std::size_t i = 0; i < count; ++i) s[i] = static_cast<char>('0' + v[i]);
        return s;
    };
    auto header2 = [&file, &out](int n, int r) {
        out << "n=" << n << " r=" << r;
        if (file.targets) {
            out << " targets=";
            for (std::size_t i = 0; i < file.targets->size(); ++i)
                out << (i ? "," : "") << (*file.targets)[i];
        }
        out << "\n";
    };
    if (file.vec) {
        const ColoringVector& v = *file.vec;
        const Shape& s = v.shape;
        if (s.kind() == ShapeKind::Circulant) {
            out << "ramsey v1 circulant\n";
            header2(s.n(), v.r);
            out << digits(v.values.data(), v.values.size()) << "\n";
        } else if (s.kind() == ShapeKind::BlockCirculant) {
            out << "ramsey v1 blocks\n";
            header2(s.n(), v.r);
            out << "m=" << s.m() << " sym=" << (s.symmetric_offdiag() ? 1 : 0) << "\n";
            int m = s.m(), d = s.d();
            std::size_t pos = 0;
            for (int p = 0; p < m; ++p)
                for (int q = p; q < m; ++q) {
                    std::size_t width =
                        p == q ? static_cast<std::size_t>(d / 2)
                               : (s.symmetric_offdiag()
                                      ? static_cast<std::size_t>(d / 2 + 1)
                                      : static_cast<std::size_t>(d));
                    out << digits(v.values.data() + pos, width) << "\n";
                    pos += width;
                }
        } else {
            // free-edges vector: stored as an explicit edges file
            EdgeColoring col = expand(v);
            write_coloring(ColoringFile{{}, col, file.targets}, out);
            return;
        }
    } else {
        const EdgeColoring& col = *file.edges;
        out << "ramsey v1 edges\n";
        header2(col.n, col.r);
        std::string row;
        for (int u = 0; u < col.n - 1; ++u) {
            row.assign(static_cast<std::size_t>(col.n - 1 - u), '0');
            for (int v = u + 1; v < col.n; ++v)
                row[v - u - 1] = static_cast<char>('0' + col.color(u, v));
            out << row << "\n";
        }
    }
}

void write_coloring(const ColoringFile& file, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_coloring(file, out);
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

void log_trajectory(const SearchResult& result, std::ostream& out) {
    for (const auto& p : result.trajectory) {
        out << "iter=" << p.iter << " score=" << format_number(p.score) << " f=";
        for (std::size_t c = 0; c < p.f.size(); ++c)
            out << (c ? "," : "") << p.f[c];
        out << " T=" << (p.has_T ? format_number(p.T) : std::string("-")) << " w=";
        for (std::size_t c = 0; c < p.w.size(); ++c)
            out << (c ? "," : "") << format_number(p.w[c]);
        out << "\n";
    }
    out << "result=" << (result.good ? "good" : "exhausted")
        << " seed=" << result.seed << "\n";
}

} // namespace ramsey
