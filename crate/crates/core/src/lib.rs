pub mod cli;
pub mod diagram;
pub mod homfly;
pub mod montesinos;
pub mod polynomial;
pub mod rational;
pub mod reduction;
pub mod verify;
