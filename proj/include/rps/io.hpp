#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rps/basis.hpp"
#include "rps/coeff.hpp"
#include "rps/linalg.hpp"
#include "rps/mesh.hpp"

namespace rps::io {

/// Shortest round-trip decimal representation ("%.17g").
std::string format_double(double v);

std::string sha256_hex(std::string_view data);

/// Output directory that records every file it writes and emits a manifest of
/// "sha256  relative/path" lines, sorted by path.
class OutputDir {
public:
    explicit OutputDir(std::filesystem::path root);

    const std::filesystem::path& root() const { return root_; }
    void write(const std::string& relative, std::string_view content);
    /// Writes MANIFEST (not listed in itself) and returns its text.
    std::string write_manifest();
    const std::map<std::string, std::string>& files() const { return hashes_; }

private:
    std::filesystem::path root_;
    std::map<std::string, std::string> hashes_;
};

/// Header row then one row per record, comma separated.
std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

/// "vertices N" section with "index x [y]" lines, "cells M" with vertex
/// indices, then "coarse_nodes K" with one vertex index per line.
std::string mesh_text(const TriMesh& mesh);

/// "row,col,value" lines for every stored entry.
std::string coo_text(const SparseMatrix& m);
std::string dense_csv(const DenseMatrix& m);
/// node,value over the support.
std::string basis_csv(const BasisFunction& f);
/// node,value over all fine vertices.
std::string nodal_csv(const Vector& values);
/// cell,x,y,value with barycenters.
std::string field_csv(const TriMesh& mesh, const CellCoeffs& a);

struct PlotSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

/// Line plot with optional logarithmic axes.
std::string svg_plot(const std::string& title, const std::string& x_label, const std::string& y_label,
                     const std::vector<PlotSeries>& series, bool log_x, bool log_y);

/// CSV with a header line and "node,value" records keyed by coarse-node index.
std::map<int, double> read_measurements(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace rps::io
