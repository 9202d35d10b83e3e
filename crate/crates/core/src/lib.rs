pub mod algebra;
pub mod diagram;
pub mod kashaev;
