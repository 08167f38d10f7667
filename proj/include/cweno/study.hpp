// study.hpp
// Error norms, grid-refinement studies, and shock-tube reports with CSV
// output. All output is deterministic: identical inputs give identical bytes.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cweno/problems.hpp"
#include "cweno/scheme1d.hpp"
#include "cweno/scheme2d.hpp"

namespace cweno {

struct ErrorNorms {
    std::vector<double> l1, linf;  // per component
};

// Discrete norms of the difference: L1 = sum |diff| * cell size, Linf = max |diff|.
// Both fields must live on the same grid with the same component count.
ErrorNorms error_norms(const CellField1D& computed, const CellField1D& reference);
ErrorNorms error_norms(const CellField2D& computed, const CellField2D& reference);

struct ErrorReport {
    int n = 0;
    double l1 = 0.0, linf = 0.0;
    double l1_order = std::numeric_limits<double>::quiet_NaN();
    double linf_order = std::numeric_limits<double>::quiet_NaN();
    double wall_seconds = 0.0;
};

// Per-run parameter overrides; unset fields fall back to the problem defaults.
struct StudyOptions {
    std::optional<double> lambda;
    std::optional<double> epsilon;
    std::optional<double> t_final;
    std::optional<BcKind> bc;
    int p_exponent = 2;
    bool ideal_weights = false;

    SchemeParams scheme_params(const auto& problem) const {
        SchemeParams sp;
        sp.cweno.epsilon = epsilon.value_or(problem.default_eps);
        sp.cweno.p_exponent = p_exponent;
        sp.cweno.force_ideal = ideal_weights;
        return sp;
    }
};

// Runs a scalar problem at each resolution (a doubling sequence) and compares
// against the problem's exact cell averages. Orders use log2(e(N) / e(2N)).
std::vector<ErrorReport> convergence_study(const std::string& problem_name,
                                           const std::vector<int>& resolutions,
                                           const StudyOptions& opt);

// Header "N,L1,L1_order,Linf,Linf_order"; order cells of the coarsest row are empty.
std::string convergence_csv(const std::vector<ErrorReport>& reports);

struct ShockReport {
    CellField1D field;                  // final aligned field
    std::vector<double> center_weight;  // at final time
    double l1_density = 0.0;            // vs the exact Riemann solution
    RunReport1D run;
    std::string csv;  // profile: x,rho,m,E,w_center
};

// Runs a shock-tube problem (sod/lax) and assembles the profile report.
ShockReport shock_report(const std::string& problem_name, int n, double lambda,
                         const StudyOptions& opt);

// Profile of a 1D field: "x,<components...>,w_center".
std::string profile_csv(const CellField1D& field, const std::vector<double>& center_weight,
                        const std::vector<std::string>& component_names);
// Flat listing of a 2D scalar field: "x,y,u,w_center".
std::string profile_csv(const CellField2D& field, const std::vector<double>& center_weight);

// Unified single-run entry used by the command-line tool.
struct RunOutput {
    bool is_2d = false;
    CellField1D field_1d;
    CellField2D field_2d;
    std::vector<double> center_weight;
    double initial_courant = 0.0, max_courant = 0.0;
    bool courant_warning = false;
    int steps = 0;
    double dt = 0.0;
    std::optional<ErrorNorms> errors;  // vs the exact reference, when one exists
    std::string csv;
};
RunOutput run_problem(const std::string& problem_name, int n, const StudyOptions& opt);

}  // namespace cweno
