use std::fmt;

/// Exit statuses of the `stringcone` binary.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const INPUT: i32 = 3;
    pub const CRYSTAL: i32 = 4;
    pub const CONE: i32 = 5;
    pub const HILBERT: i32 = 6;
    pub const CERTIFICATE: i32 = 7;
    pub const IO: i32 = 8;
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Pipeline(stringcone::Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Io(_) => exit::IO,
            CliError::Pipeline(e) => match e.stage() {
                Some("input") => exit::INPUT,
                Some("crystal") | Some("strings") => exit::CRYSTAL,
                Some("cone") | Some("sections") => exit::CONE,
                Some("hilbert") | Some("relations") => exit::HILBERT,
                _ => exit::CERTIFICATE,
            },
        }
    }

    pub fn stage(&self) -> &str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::Pipeline(e) => e.stage().unwrap_or("pipeline"),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Pipeline(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "io: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<stringcone::Error> for CliError {
    fn from(e: stringcone::Error) -> Self {
        CliError::Pipeline(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}
