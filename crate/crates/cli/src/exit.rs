use std::fmt;

/// A failed command and the process exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

pub const NEGATIVE: u8 = 1;
pub const INPUT: u8 = 2;
pub const INTERNAL: u8 = 3;

impl Failure {
    pub fn input(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: INPUT,
            error: error.into(),
        }
    }

    pub fn internal(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: INTERNAL,
            error: error.into(),
        }
    }
}

impl From<chromhom_core::Error> for Failure {
    fn from(e: chromhom_core::Error) -> Self {
        if e.is_input_error() {
            Failure::input(e)
        } else {
            Failure::internal(e)
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}", self.error)
    }
}

pub type CmdResult = Result<u8, Failure>;
