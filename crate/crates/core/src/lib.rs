pub mod algebra;
pub mod exactla;
pub mod modules;
pub mod tate;
pub mod adjunction;
pub mod harness;
