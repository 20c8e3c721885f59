pub mod criteria;
pub mod cyclo;
pub mod diagonal;
pub mod linalg;
pub mod nichols;
pub mod perm;
pub mod reps;
pub mod ydmod;
