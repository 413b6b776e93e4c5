#include "rps/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "rps/errors.hpp"

namespace rps::io {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw IoError("sha256 digest failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int k = 0; k < len; ++k) {
        out.push_back(hex[digest[k] >> 4]);
        out.push_back(hex[digest[k] & 0xf]);
    }
    return out;
}

OutputDir::OutputDir(std::filesystem::path root) : root_(std::move(root)) {
    std::error_code ec;
    std::filesystem::create_directories(root_, ec);
    if (ec) throw IoError("cannot create output directory " + root_.string() + ": " + ec.message());
}

void OutputDir::write(const std::string& relative, std::string_view content) {
    const auto path = root_ / relative;
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed for " + path.string());
    hashes_[relative] = sha256_hex(content);
}

std::string OutputDir::write_manifest() {
    std::string text;
    for (const auto& [name, hash] : hashes_) text += hash + "  " + name + "\n";
    const auto path = root_ / "MANIFEST";
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw IoError("write failed for " + path.string());
    return text;
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (k) out.push_back(',');
            out += cells[k];
        }
        out.push_back('\n');
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
}

std::string mesh_text(const TriMesh& mesh) {
    std::ostringstream out;
    out << "dim " << mesh.dim() << "\n";
    out << "vertices " << mesh.num_vertices() << "\n";
    for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
        out << v << ' ' << format_double(mesh.vertex(v)[0]);
        if (mesh.dim() == 2) out << ' ' << format_double(mesh.vertex(v)[1]);
        out << '\n';
    }
    out << "cells " << mesh.num_cells() << "\n";
    for (std::size_t c = 0; c < mesh.num_cells(); ++c) {
        const auto cell = mesh.cell(c);
        for (std::size_t k = 0; k < cell.size(); ++k) out << (k ? " " : "") << cell[k];
        out << '\n';
    }
    out << "coarse_nodes " << mesh.coarse_nodes().size() << "\n";
    for (int v : mesh.coarse_nodes()) out << v << '\n';
    return out.str();
}

std::string coo_text(const SparseMatrix& m) {
    std::string out = "row,col,value\n";
    for (int r = 0; r < m.outerSize(); ++r) {
        for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
            out += std::to_string(it.row()) + "," + std::to_string(it.col()) + "," + format_double(it.value()) + "\n";
        }
    }
    return out;
}

std::string dense_csv(const DenseMatrix& m) {
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out.push_back(',');
            out += format_double(m(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

std::string basis_csv(const BasisFunction& f) {
    std::string out = "node,value\n";
    for (std::size_t k = 0; k < f.support.size(); ++k) {
        out += std::to_string(f.support[k]) + "," + format_double(f.values[k]) + "\n";
    }
    return out;
}

std::string nodal_csv(const Vector& values) {
    std::string out = "node,value\n";
    for (Eigen::Index k = 0; k < values.size(); ++k) out += std::to_string(k) + "," + format_double(values[k]) + "\n";
    return out;
}

std::string field_csv(const TriMesh& mesh, const CellCoeffs& a) {
    std::string out = "cell,x,y,value\n";
    for (std::size_t c = 0; c < mesh.num_cells(); ++c) {
        const Point g = mesh.barycenter(c);
        out += std::to_string(c) + "," + format_double(g[0]) + "," + format_double(g[1]) + "," +
               format_double(a.values[c]) + "\n";
    }
    return out;
}

namespace {

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out.push_back(ch);
        }
    }
    return out;
}

std::string fixed(double v, int digits = 2) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string tick_label(double v, bool log_axis) {
    char buf[32];
    if (log_axis) {
        std::snprintf(buf, sizeof buf, "1e%d", static_cast<int>(std::lround(v)));
    } else {
        std::snprintf(buf, sizeof buf, "%.3g", v);
    }
    return buf;
}

}  // namespace

std::string svg_plot(const std::string& title, const std::string& x_label, const std::string& y_label,
                     const std::vector<PlotSeries>& series, bool log_x, bool log_y) {
    constexpr double width = 640, height = 420, left = 70, right = 150, top = 40, bottom = 50;
    const double pw = width - left - right, ph = height - top - bottom;
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

    auto tx = [log_x](double v) { return log_x ? std::log10(v) : v; };
    auto ty = [log_y](double v) { return log_y ? std::log10(v) : v; };
    auto usable = [&](double x, double y) {
        return std::isfinite(x) && std::isfinite(y) && (!log_x || x > 0) && (!log_y || y > 0);
    };

    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& s : series) {
        for (std::size_t k = 0; k < s.x.size() && k < s.y.size(); ++k) {
            if (!usable(s.x[k], s.y[k])) continue;
            x0 = std::min(x0, tx(s.x[k]));
            x1 = std::max(x1, tx(s.x[k]));
            y0 = std::min(y0, ty(s.y[k]));
            y1 = std::max(y1, ty(s.y[k]));
        }
    }
    if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (log_y) y0 = std::floor(y0), y1 = std::ceil(y1);
    if (log_x) x0 = std::floor(x0 * 2) / 2, x1 = std::ceil(x1 * 2) / 2;
    if (x1 - x0 < 1e-12) x0 -= 0.5, x1 += 0.5;
    if (y1 - y0 < 1e-12) y0 -= 0.5, y1 += 0.5;
    auto px = [&](double v) { return left + (tx(v) - x0) / (x1 - x0) * pw; };
    auto py = [&](double v) { return top + ph - (ty(v) - y0) / (y1 - y0) * ph; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << left + pw / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
        << escape_xml(title) << "</text>\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    const int y_ticks = log_y ? static_cast<int>(y1 - y0) : 5;
    for (int k = 0; k <= y_ticks; ++k) {
        const double v = y0 + (y1 - y0) * k / std::max(y_ticks, 1);
        const double y = top + ph - (v - y0) / (y1 - y0) * ph;
        out << "<line x1=\"" << left << "\" y1=\"" << fixed(y) << "\" x2=\"" << left + pw << "\" y2=\"" << fixed(y)
            << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << left - 6 << "\" y=\"" << fixed(y + 4) << "\" text-anchor=\"end\">"
            << tick_label(v, log_y) << "</text>\n";
    }
    const int x_ticks = 5;
    for (int k = 0; k <= x_ticks; ++k) {
        const double v = x0 + (x1 - x0) * k / x_ticks;
        const double x = left + (v - x0) / (x1 - x0) * pw;
        char buf[32];
        if (log_x) {
            std::snprintf(buf, sizeof buf, "%.3g", std::pow(10.0, v));
        } else {
            std::snprintf(buf, sizeof buf, "%.3g", v);
        }
        out << "<text x=\"" << fixed(x) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">" << buf
            << "</text>\n";
    }
    out << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">"
        << escape_xml(x_label) << "</text>\n";
    out << "<text x=\"16\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << top + ph / 2 << ")\">" << escape_xml(y_label) << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = colors[s % 6];
        std::string pts;
        for (std::size_t k = 0; k < series[s].x.size() && k < series[s].y.size(); ++k) {
            if (!usable(series[s].x[k], series[s].y[k])) continue;
            pts += fixed(px(series[s].x[k])) + "," + fixed(py(series[s].y[k])) + " ";
            out << "<circle cx=\"" << fixed(px(series[s].x[k])) << "\" cy=\"" << fixed(py(series[s].y[k]))
                << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << pts
            << "\"/>\n";
        const double ly = top + 16 + 18.0 * static_cast<double>(s);
        out << "<line x1=\"" << left + pw + 12 << "\" y1=\"" << ly << "\" x2=\"" << left + pw + 32 << "\" y2=\""
            << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << left + pw + 38 << "\" y=\"" << ly + 4 << "\">" << escape_xml(series[s].name)
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::map<int, double> read_measurements(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    std::map<int, double> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw MeasurementError(path.string() + ":" + std::to_string(lineno) + ": expected 'node,value'");
        }
        try {
            std::size_t used = 0;
            const int node = std::stoi(line.substr(0, comma), &used);
            const double value = std::stod(line.substr(comma + 1));
            if (out.count(node)) {
                throw MeasurementError(path.string() + ":" + std::to_string(lineno) + ": duplicate node " +
                                       std::to_string(node));
            }
            out[node] = value;
        } catch (const std::invalid_argument&) {
            if (lineno == 1) continue;  // header
            throw MeasurementError(path.string() + ":" + std::to_string(lineno) + ": malformed record");
        } catch (const std::out_of_range&) {
            throw MeasurementError(path.string() + ":" + std::to_string(lineno) + ": value out of range");
        }
    }
    return out;
}

}  // namespace rps::io
