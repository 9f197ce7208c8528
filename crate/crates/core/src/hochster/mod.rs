//! Bigraded Hochster tables, combinatorial Alexander duality and the
//! homology formulas for composition complexes.

mod composition;
mod duality;
mod table;

pub use composition::{
    composition_homology, hochster_composition_formula, piece_formula, polyhedral_homology_formula,
    FormulaComparison, HochsterPieceFormula, PieceComparison,
};
pub use duality::{
    alexander_duality_witness, duality_groups_agree, shuffle_sign, DualityWitness, WitnessDegree,
};
pub use table::{hochster_entry, hochster_table, BigradedTable};
