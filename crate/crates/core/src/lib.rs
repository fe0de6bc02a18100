pub mod algebra;
pub mod chain;
pub mod cyclic;
pub mod dihedral;
pub mod linalg;
pub mod resolution;
pub mod small;
pub mod verify;
