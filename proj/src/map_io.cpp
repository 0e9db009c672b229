#include "digitop/map_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "digitop/image_io.hpp"
#include "text_reader.hpp"

namespace digitop {

using detail::TextReader;

namespace {

std::string keyword_rest(TextReader& r, const std::string& line, const char* keyword) {
    auto sp = line.find_first_of(" \t");
    if (sp == std::string::npos || line.substr(0, sp) != keyword)
        r.fail("expected '" + std::string(keyword) + " <path>'");
    auto b = line.find_first_not_of(" \t", sp);
    if (b == std::string::npos) r.fail("expected '" + std::string(keyword) + " <path>'");
    return line.substr(b);
}

} // namespace

DigitalMap read_map(std::istream& in, const std::string& origin, const std::filesystem::path& base_dir) {
    TextReader r(in, origin);

    auto magic = TextReader::tokens(r.require("DIGMAP 1 header"));
    if (magic.size() != 2 || magic[0] != "DIGMAP" || magic[1] != "1")
        r.fail("expected 'DIGMAP 1' header");

    std::string dom_path = keyword_rest(r, r.require("domain line"), "domain");
    std::string cod_path = keyword_rest(r, r.require("codomain line"), "codomain");

    auto dom = std::make_shared<const DigitalImage>(read_image_file(base_dir / dom_path));
    auto cod = dom_path == cod_path
                   ? dom
                   : std::make_shared<const DigitalImage>(read_image_file(base_dir / cod_path));

    auto pairs_line = TextReader::tokens(r.require("pairs line"));
    if (pairs_line.size() != 2 || pairs_line[0] != "pairs") r.fail("expected 'pairs <k>'");
    int k = r.parse_count(pairs_line[1], "pair count");

    std::vector<int> table(static_cast<std::size_t>(dom->size()), -1);
    for (int e = 0; e < k; ++e) {
        auto toks = TextReader::tokens(r.require("pair line"));
        auto arrow = std::find(toks.begin(), toks.end(), "->");
        if (arrow == toks.end()) r.fail("pair line missing '->'");
        if (arrow - toks.begin() != dom->ambient_dim())
            r.fail("domain point has wrong number of coordinates");
        if (toks.end() - arrow - 1 != cod->ambient_dim())
            r.fail("codomain point has wrong number of coordinates");
        Point x, y;
        for (auto it = toks.begin(); it != arrow; ++it) x.coords.push_back(r.parse_int(*it));
        for (auto it = arrow + 1; it != toks.end(); ++it) y.coords.push_back(r.parse_int(*it));
        auto xi = dom->index_of(x);
        if (!xi) r.fail("point " + to_string(x) + " is not in the domain");
        auto yi = cod->index_of(y);
        if (!yi) r.fail("point " + to_string(y) + " is not in the codomain");
        if (table[static_cast<std::size_t>(*xi)] != -1)
            r.fail("domain point " + to_string(x) + " mapped twice");
        table[static_cast<std::size_t>(*xi)] = *yi;
    }
    for (int i = 0; i < dom->size(); ++i)
        if (table[static_cast<std::size_t>(i)] == -1)
            throw InputError(origin + ": domain point " + to_string(dom->point(i)) + " has no image");

    std::string extra;
    if (r.next(extra)) r.fail("trailing content: '" + extra + "'");

    return DigitalMap(std::move(dom), std::move(cod), std::move(table));
}

DigitalMap read_map_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open map file: " + path.string());
    std::filesystem::path base = path.parent_path();
    if (base.empty()) base = ".";
    return read_map(in, path.string(), base);
}

std::vector<std::string> pair_lines(const DigitalMap& f) {
    std::vector<std::string> out;
    for (int i = 0; i < f.domain().size(); ++i) {
        std::ostringstream ss;
        const Point& x = f.domain().point(i);
        const Point& y = f.codomain().point(f(i));
        for (int c = 0; c < x.arity(); ++c) {
            if (c) ss << ' ';
            ss << x[c];
        }
        ss << " ->";
        for (int c = 0; c < y.arity(); ++c) ss << ' ' << y[c];
        out.push_back(ss.str());
    }
    return out;
}

void write_map(std::ostream& out, const DigitalMap& f, const std::string& domain_path,
               const std::string& codomain_path) {
    out << "DIGMAP 1\n";
    out << "domain " << domain_path << '\n';
    out << "codomain " << codomain_path << '\n';
    out << "pairs " << f.domain().size() << '\n';
    for (const auto& line : pair_lines(f)) out << line << '\n';
}

void write_map_file(const std::filesystem::path& path, const DigitalMap& f,
                    const std::string& domain_path, const std::string& codomain_path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write map file: " + path.string());
    write_map(out, f, domain_path, codomain_path);
    if (!out.flush()) throw InputError("error writing map file: " + path.string());
}

} // namespace digitop
