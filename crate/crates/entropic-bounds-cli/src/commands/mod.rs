pub mod evaluate;
pub mod figure;
pub mod keyrate;
pub mod verify;
