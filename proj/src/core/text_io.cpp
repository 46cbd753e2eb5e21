#include "core/text_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "core/error.hpp"

namespace smlg {

namespace {

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    bool next(std::string_view& line) {
        if (pos_ >= text_.size())
            return false;
        const auto nl = text_.find('\n', pos_);
        if (nl == std::string_view::npos) {
            line = text_.substr(pos_);
            pos_ = text_.size();
        } else {
            line = text_.substr(pos_, nl - pos_);
            pos_ = nl + 1;
        }
        ++line_number_;
        return true;
    }

    std::string_view require(const char* what) {
        std::string_view line;
        if (!next(line))
            fail(std::string("missing ") + what);
        return line;
    }

    // Only blank lines may follow the payload.
    void expect_end() {
        std::string_view line;
        while (next(line))
            if (!line.empty())
                fail("unexpected trailing content");
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw Error(ErrorCode::Parse,
                    "line " + std::to_string(line_number_) + ": " + message);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_number_ = 0;
};

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

std::uint64_t parse_count(const LineReader& reader, std::string_view field, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        reader.fail(std::string("expected ") + what + ", got '" + std::string(field) + "'");
    return value;
}

void expect_header(LineReader& reader, std::string_view magic) {
    const auto line = reader.require("header");
    auto fields = split_ws(line);
    if (fields.size() != 2 || fields[0] != magic || fields[1] != "v1")
        reader.fail("malformed header, expected '" + std::string(magic) + " v1'");
}

} // namespace

LabeledGraph parse_graph(std::string_view text) {
    LineReader reader(text);
    expect_header(reader, "smlg-graph");

    auto fields = split_ws(reader.require("node count"));
    if (fields.size() != 2 || fields[0] != "nodes")
        reader.fail("expected 'nodes <count>'");
    const auto node_count = parse_count(reader, fields[1], "node count");

    std::vector<std::string> labels;
    labels.reserve(node_count);
    for (std::uint64_t i = 0; i < node_count; ++i) {
        fields = split_ws(reader.require("node line"));
        if (fields.size() != 2)
            reader.fail("expected '<id> <token>'");
        if (parse_count(reader, fields[0], "node id") != i)
            reader.fail("node ids must be 0..|V|-1 in order, expected " + std::to_string(i));
        labels.emplace_back(fields[1]);
    }

    fields = split_ws(reader.require("edge count"));
    if (fields.size() != 2 || fields[0] != "edges")
        reader.fail("expected 'edges <count>'");
    const auto edge_count = parse_count(reader, fields[1], "edge count");

    std::vector<Edge> edges;
    edges.reserve(edge_count);
    for (std::uint64_t i = 0; i < edge_count; ++i) {
        fields = split_ws(reader.require("edge line"));
        if (fields.size() != 2)
            reader.fail("expected '<src> <dst>'");
        const auto src = parse_count(reader, fields[0], "edge source");
        const auto dst = parse_count(reader, fields[1], "edge target");
        if (src >= node_count || dst >= node_count)
            reader.fail("edge endpoint out of range");
        edges.push_back({static_cast<NodeId>(src), static_cast<NodeId>(dst)});
    }
    reader.expect_end();
    return LabeledGraph(std::move(labels), std::move(edges));
}

std::string serialize_graph(const LabeledGraph& g) {
    std::ostringstream out;
    out << "smlg-graph v1\n";
    out << "nodes " << g.node_count() << "\n";
    for (NodeId v = 0; v < g.node_count(); ++v)
        out << v << ' ' << g.label(v) << "\n";
    out << "edges " << g.edge_count() << "\n";
    for (const Edge& e : g.edges())
        out << e.src << ' ' << e.dst << "\n";
    return std::move(out).str();
}

Pattern parse_pattern(std::string_view text) {
    LineReader reader(text);
    expect_header(reader, "smlg-pattern");
    std::string_view line;
    Pattern p;
    if (reader.next(line))
        for (auto field : split_ws(line))
            p.tokens.emplace_back(field);
    reader.expect_end();
    return p;
}

std::string serialize_pattern(const Pattern& p) {
    std::ostringstream out;
    out << "smlg-pattern v1\n";
    for (std::size_t i = 0; i < p.tokens.size(); ++i)
        out << (i == 0 ? "" : " ") << p.tokens[i];
    out << "\n";
    return std::move(out).str();
}

OvInstance parse_ov(std::string_view text) {
    LineReader reader(text);
    expect_header(reader, "ov");
    auto fields = split_ws(reader.require("instance shape"));
    if (fields.size() != 3)
        reader.fail("expected '<N> <M> <d>'");
    const auto n = parse_count(reader, fields[0], "N");
    const auto m = parse_count(reader, fields[1], "M");
    const auto d = parse_count(reader, fields[2], "d");

    OvInstance inst;
    inst.dim = static_cast<std::uint32_t>(d);
    auto read_rows = [&](std::vector<BitVector>& side, std::uint64_t rows) {
        side.reserve(rows);
        for (std::uint64_t i = 0; i < rows; ++i) {
            const auto line = reader.require("bit row");
            fields = split_ws(line);
            const std::string_view row = fields.size() == 1 ? fields[0] : std::string_view{};
            if ((fields.empty() && d != 0) || (!fields.empty() && fields.size() != 1) ||
                row.size() != d)
                reader.fail("expected a row of exactly " + std::to_string(d) + " bits");
            BitVector v;
            v.bits.reserve(d);
            for (char c : row) {
                if (c != '0' && c != '1')
                    reader.fail(std::string("bad bit character '") + c + "'");
                v.bits.push_back(c == '1' ? 1 : 0);
            }
            side.push_back(std::move(v));
        }
    };
    read_rows(inst.x, n);
    read_rows(inst.y, m);
    reader.expect_end();
    return inst;
}

std::string serialize_ov(const OvInstance& inst) {
    std::ostringstream out;
    out << "ov v1\n";
    out << inst.x.size() << ' ' << inst.y.size() << ' ' << inst.dim << "\n";
    auto write_rows = [&](const std::vector<BitVector>& side) {
        for (const auto& v : side) {
            for (auto bit : v.bits)
                out << (bit != 0 ? '1' : '0');
            out << "\n";
        }
    };
    write_rows(inst.x);
    write_rows(inst.y);
    return std::move(out).str();
}

SetFamily parse_sets(std::string_view text) {
    LineReader reader(text);
    expect_header(reader, "sic");
    auto fields = split_ws(reader.require("family shape"));
    if (fields.size() != 2)
        reader.fail("expected '<n> <u>'");
    const auto n = parse_count(reader, fields[0], "set count");
    const auto u = parse_count(reader, fields[1], "universe size");

    SetFamily family;
    family.universe = static_cast<std::uint32_t>(u);
    family.sets.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::string_view line;
        if (!reader.next(line))
            reader.fail("missing set line " + std::to_string(i + 1));
        std::vector<std::uint32_t> set;
        for (auto field : split_ws(line))
            set.push_back(static_cast<std::uint32_t>(parse_count(reader, field, "element")));
        family.sets.push_back(std::move(set));
    }
    reader.expect_end();
    return family;
}

std::string serialize_sets(const SetFamily& family) {
    std::ostringstream out;
    out << "sic v1\n";
    out << family.sets.size() << ' ' << family.universe << "\n";
    for (const auto& set : family.sets) {
        for (std::size_t i = 0; i < set.size(); ++i)
            out << (i == 0 ? "" : " ") << set[i];
        out << "\n";
    }
    return std::move(out).str();
}

} // namespace smlg
