pub mod heart;
pub mod io;
pub mod periods;
pub mod qp;
pub mod rep;
pub mod surface;
