#include "tubings/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "tubings/error.hpp"

namespace tubings {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

}  // namespace

GraphDocument parse_graph(std::string_view text) {
    GraphDocument doc;
    doc.source = std::string(text);
    std::vector<int> nodes;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "node") {
            int id = 0;
            if (tok.size() != 2 || !parse_int(tok[1], id)) throw SyntaxError(line_no, "expected `node <id>`");
            if (id <= 0) throw SyntaxError(line_no, "node ids must be positive integers");
            nodes.push_back(id);
        } else if (tok[0] == "edge") {
            Edge e;
            if ((tok.size() != 3 && tok.size() != 4) || !parse_int(tok[1], e.a) || !parse_int(tok[2], e.b))
                throw SyntaxError(line_no, "expected `edge <id> <id> [<label>]`");
            if (tok.size() == 4) e.label = std::string(tok[3]);
            if (e.a == e.b)
                throw Error(ErrorKind::LoopEdge, "line " + std::to_string(line_no) + ": edge " + std::to_string(e.a) +
                                                     "-" + std::to_string(e.b));
            edges.push_back(std::move(e));
            doc.edge_lines.push_back(line_no);
        } else {
            throw SyntaxError(line_no, "unknown directive '" + std::string(tok[0]) + "'");
        }
    }
    if (nodes.empty()) {
        std::set<int> implied;
        for (const auto& e : edges) {
            implied.insert(e.a);
            implied.insert(e.b);
        }
        for (int id : implied)
            if (id <= 0) throw Error(ErrorKind::InvalidNode, "node ids must be positive, got " + std::to_string(id));
        nodes.assign(implied.begin(), implied.end());
    } else {
        const std::set<int> known(nodes.begin(), nodes.end());
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (int id : {edges[i].a, edges[i].b})
                if (!known.count(id))
                    throw Error(ErrorKind::UnknownNodeInEdge,
                                "line " + std::to_string(doc.edge_lines[i]) + ": node " + std::to_string(id));
    }
    doc.graph = Pseudograph::validate(std::move(nodes), std::move(edges));
    return doc;
}

GraphDocument read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string serialize(const Pseudograph& g) {
    std::string out;
    for (int id : g.nodes()) out += "node " + std::to_string(id) + "\n";
    for (const auto& e : g.edges()) {
        out += "edge " + std::to_string(e.a) + " " + std::to_string(e.b);
        if (e.label) out += " " + *e.label;
        out += "\n";
    }
    return out;
}

Collection parse_collection(std::string_view text, const Pseudograph& g) {
    std::vector<int> nodes;
    std::vector<std::string> labels;
    std::size_t pos = 0;
    const std::string all = trim(text);
    if (!all.empty()) {
        while (pos <= all.size()) {
            const std::size_t comma = all.find(',', pos);
            const std::string tok =
                trim(std::string_view(all).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
            pos = comma == std::string::npos ? all.size() + 1 : comma + 1;
            if (tok.empty()) throw Error(ErrorKind::UnknownMember, "empty token in collection");
            int id = 0;
            if (parse_int(tok, id)) nodes.push_back(id);
            else labels.push_back(tok);
        }
    }
    Collection c(std::move(nodes), std::move(labels));
    g.mask_of(c);
    return c;
}

}  // namespace tubings
