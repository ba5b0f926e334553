pub mod branching;
pub mod characters;
pub mod error;
pub mod halfint;
pub mod laurent;
pub mod oracle;
pub mod pieri;
pub mod sl2ring;
pub mod weights;

pub use branching::{
    branch, branch_bd, branch_db, branch_gl, branch_sp, shift_count, signed_shift_closed_form,
    signed_shift_sum, sp_rearrangement, BranchingTable, Multiplicity,
};
pub use characters::{
    char_b, char_c, char_d, char_gl, character, rel_weyl, rel_weyl_bd, rel_weyl_c, rel_weyl_gl,
    weyl_denominator_product, Grade, GradedTerm, GradedVirtualSum, RelWeylData,
};
pub use error::{Error, Result};
pub use halfint::{lex_cmp, ExpVec, HalfInt, HalfIntVec};
pub use laurent::{det, LaurentPoly};
pub use oracle::{
    decompose, decompose_h_pair, restrict_char, verify_branching, verify_pieri, verify_rel_weyl,
    PieriInput, VirtualCharacter,
};
pub use pieri::{
    dual_pieri_gl, halfspin_tensor, rel_pieri_gl, rel_pieri_sp, rel_pieri_sp_straightened,
    rel_pieri_spin, HalfSpin,
};
pub use sl2ring::SL2Module;
pub use weights::{BranchingPair, DominantWeight, Family, GroupFamily, PairKind};
