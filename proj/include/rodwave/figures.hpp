#pragma once

#include "rodwave/catalog.hpp"
#include "rodwave/verify.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace rodwave {

enum class OutputKind { Curve2D, Surface3D };
enum class DataFormat { Csv, Json };

std::string to_string(OutputKind k);
/// "csv" or "json"; throws std::invalid_argument.
DataFormat parse_data_format(std::string_view text);

struct FigurePreset {
    std::string id;                  ///< "fig1" .. "fig11"
    std::string caption;             ///< forms the figure cites
    std::vector<FamilyId> cited;     ///< families as cited
    std::vector<FamilyId> families;  ///< families emitted (cited unless the gate rejects them)
    OutputKind kind;
    char material_set;  ///< 'A' or 'B'
    Rational tau, sigma;
    double e = 2, q0 = 2, q1 = 2;
    double mu = 0.25;      ///< fixed mu when not swept
    double lambda = 2;     ///< fixed lambda when not swept
    double t_fixed = 1;    ///< CURVE_2D only
    std::string swept;     ///< "mu", "lambda" or empty
    std::vector<double> sweep;
    double x_min, x_max, t_min = 0, t_max = 0;
    int nx, nt = 1;
};

const std::vector<FigurePreset>& figure_presets();
/// Throws std::invalid_argument naming an unknown id.
const FigurePreset& figure_preset(std::string_view id);

/// One emitted file.
struct Dataset {
    std::string filename;
    std::string content;
    int rows = 0;
    int masked_rows = 0;
};

struct FigureOutput {
    std::vector<Dataset> files;
    nlohmann::json manifest;
};

/// Inputs for one series: the preset's material, tau, sigma, e, Q0, Q1 and fixed or swept
/// mu/lambda. Families whose lambda depends on mu get mu solved from the requested lambda.
FamilyInputs series_inputs(const FigurePreset& p, const FamilyId& id, double swept_value);

/// The verify run matching an emitted grid exactly.
GridSpec series_grid(const FigurePreset& p);

/// Evaluates every series on its grid. Singular points are emitted as empty cells and
/// counted; the manifest carries a verify_family report for each file's grid.
FigureOutput render_figure(const FigurePreset& p, DataFormat fmt);

/// Writes the datasets and "<id>_manifest.json" into dir (created if missing).
void write_figure(const FigureOutput& out, const std::filesystem::path& dir, const std::string& preset_id);

}  // namespace rodwave
