#pragma once

#include "pdkl/types.hpp"

namespace pdkl {

enum class PhaseKind { Stiff, Compliant };

struct MaterialPhase {
  double elastic_modulus = 0.0;  // Pa
  double density = 0.0;          // kg/m^3
  double poisson_ratio = 0.0;    // 2D only; bond-based plane stress fixes it to 1/3
};

enum class CellLayout {
  Bar1D_QuarterHalfQuarter,       // stiff l/4 | compliant l/2 | stiff l/4
  Plate2D_CenterSquareInclusion,  // compliant middle-third square in a stiff matrix
  Plate2D_CrossInclusion,         // compliant middle-third cross, stiff center and corners
};

/// Periodic two-phase medium.  The domain is [0, L] (1D) or [0, L]^2 (2D),
/// tiled by unit cells of side cell_length.
struct MicroStructureSpec {
  int dimension = 1;
  double domain_length = 0.0;  // L
  double cell_length = 0.0;    // l
  int n_cells_per_side = 0;    // L / l
  MaterialPhase stiff;
  MaterialPhase compliant;
  CellLayout layout = CellLayout::Bar1D_QuarterHalfQuarter;
};

MicroStructureSpec make_bar_1d(double domain_length, double cell_length,
                               const MaterialPhase& stiff, const MaterialPhase& compliant);
MicroStructureSpec make_plate_2d(double domain_length, int n_cells_per_side,
                                 const MaterialPhase& stiff, const MaterialPhase& compliant,
                                 CellLayout layout);

/// All invariant violations of a spec, empty when valid.  Advisory warnings
/// (e.g. fewer than 10 cells per side) go to `warnings` when non-null.
std::vector<std::string> spec_violations(const MicroStructureSpec& spec,
                                         std::vector<std::string>* warnings = nullptr);
/// Throws ConfigError listing every violation.
void validate(const MicroStructureSpec& spec);

/// Phase of the constituent at a point.  Points exactly on an interface are
/// assigned the stiff phase (compliant regions are open sets), which keeps
/// phase_at mirror- and dihedral-symmetric within the cell.  Points may sit up
/// to 1e-12*L outside the domain; farther out throws DomainError.
PhaseKind phase_kind_at(const MicroStructureSpec& spec, const Vector2d& point);
const MaterialPhase& phase_at(const MicroStructureSpec& spec, const Vector2d& point);
const MaterialPhase& phase_at(const MicroStructureSpec& spec, double x);  // 1D

/// Harmonic-mean homogenized modulus 2/(1/E_s + 1/E_c) of the 1D bar cell
/// (equal stiff/compliant volume fractions).
double homogenized_modulus_1d(const MicroStructureSpec& spec);

}  // namespace pdkl
