#include "digitop/image_io.hpp"

#include <fstream>
#include <ostream>

#include "text_reader.hpp"

namespace digitop {

using detail::TextReader;

DigitalImage read_image(std::istream& in, const std::string& origin) {
    TextReader r(in, origin);

    auto magic = TextReader::tokens(r.require("DIGIMG 1 header"));
    if (magic.size() != 2 || magic[0] != "DIGIMG" || magic[1] != "1")
        r.fail("expected 'DIGIMG 1' header");

    auto dim_line = TextReader::tokens(r.require("dim line"));
    if (dim_line.size() != 2 || dim_line[0] != "dim") r.fail("expected 'dim <n>'");
    int dim = r.parse_count(dim_line[1], "dim");

    auto adj_line = TextReader::tokens(r.require("adjacency line"));
    if (adj_line.size() != 2 || adj_line[0] != "adjacency") r.fail("expected 'adjacency c<u>' or 'adjacency explicit'");
    bool is_explicit = adj_line[1] == "explicit";
    int u = 0;
    if (!is_explicit) {
        if (adj_line[1].size() < 2 || adj_line[1][0] != 'c')
            r.fail("unknown adjacency '" + adj_line[1] + "'");
        u = r.parse_count(adj_line[1].substr(1), "u");
    }

    auto pts_line = TextReader::tokens(r.require("points line"));
    if (pts_line.size() != 2 || pts_line[0] != "points") r.fail("expected 'points <k>'");
    int k = r.parse_count(pts_line[1], "point count");

    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        auto toks = TextReader::tokens(r.require("point line"));
        if (static_cast<int>(toks.size()) != dim)
            r.fail("point has " + std::to_string(toks.size()) + " coordinates, expected " + std::to_string(dim));
        Point p;
        for (const auto& t : toks) p.coords.push_back(r.parse_int(t));
        pts.push_back(std::move(p));
    }

    Adjacency adj = CuAdjacency{u};
    if (is_explicit) {
        auto edges_line = TextReader::tokens(r.require("edges line"));
        if (edges_line.size() != 2 || edges_line[0] != "edges") r.fail("expected 'edges <m>'");
        int m = r.parse_count(edges_line[1], "edge count");
        ExplicitAdjacency ex;
        for (int e = 0; e < m; ++e) {
            auto toks = TextReader::tokens(r.require("edge line"));
            if (toks.size() != 2) r.fail("expected '<i> <j>'");
            std::int64_t i = r.parse_int(toks[0]);
            std::int64_t j = r.parse_int(toks[1]);
            if (i < 0 || i >= k || j < 0 || j >= k) r.fail("edge index out of range");
            if (i >= j) r.fail("edge indices must satisfy i < j");
            ex.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
        adj = std::move(ex);
    }

    std::string extra;
    if (r.next(extra)) r.fail("trailing content: '" + extra + "'");

    try {
        return DigitalImage(dim, std::move(pts), std::move(adj));
    } catch (const InputError& e) {
        throw InputError(origin + ": " + e.what());
    }
}

DigitalImage read_image_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open image file: " + path.string());
    return read_image(in, path.string());
}

void write_image(std::ostream& out, const DigitalImage& img) {
    out << "DIGIMG 1\n";
    out << "dim " << img.ambient_dim() << '\n';
    if (img.is_cu())
        out << "adjacency c" << img.cu() << '\n';
    else
        out << "adjacency explicit\n";
    out << "points " << img.size() << '\n';
    for (const Point& p : img.points()) {
        for (int c = 0; c < img.ambient_dim(); ++c) {
            if (c) out << ' ';
            out << p[c];
        }
        out << '\n';
    }
    if (!img.is_cu()) {
        out << "edges " << img.edge_list().size() << '\n';
        for (auto [i, j] : img.edge_list()) out << i << ' ' << j << '\n';
    }
}

void write_image_file(const std::filesystem::path& path, const DigitalImage& img) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write image file: " + path.string());
    write_image(out, img);
    if (!out.flush()) throw InputError("error writing image file: " + path.string());
}

} // namespace digitop
