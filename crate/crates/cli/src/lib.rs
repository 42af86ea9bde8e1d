//! Command-line front-end for `polya-core`.
//!
//! Parsing turns arguments into a [`CliRequest`]; [`run`] executes it and
//! returns the exit code together with everything destined for stdout and
//! stderr. All computation happens in the core crate.

mod args;
pub mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt;

use clap::Parser;
use polya_core::inventory::{coefficient_for, cycle_variables};
use polya_core::oracle::{enumerate_orbits, OracleError};
use polya_core::{
    count_distinct, cycle_index, pattern_inventory, ColorSet, Composition, GroupError, GroupSpec,
    InventoryError, PermutationGroup,
};
use thiserror::Error;

pub use args::{Cli, Command, Format, Options};
use report::{GroupInfo, OrbitRecord, Report, ResultBody};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    CycleIndex,
    Inventory,
    Count,
    Coeff,
    Orbits,
    Group,
}

impl fmt::Display for CommandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CommandKind::CycleIndex => "cycle-index",
            CommandKind::Inventory => "inventory",
            CommandKind::Count => "count",
            CommandKind::Coeff => "coeff",
            CommandKind::Orbits => "orbits",
            CommandKind::Group => "group",
        })
    }
}

/// Colors as given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Palette {
    None,
    Named(ColorSet),
    Count(usize),
}

impl Palette {
    /// Named colors, generating `c1..ck` for a bare count.
    fn names(&self) -> Result<Option<ColorSet>, CliError> {
        match self {
            Palette::None => Ok(None),
            Palette::Named(colors) => Ok(Some(colors.clone())),
            Palette::Count(k) => ColorSet::numbered(*k)
                .map(Some)
                .map_err(|e| CliError::Usage(format!("--num-colors {k}: {e}"))),
        }
    }

    fn count(&self) -> Option<usize> {
        match self {
            Palette::None => None,
            Palette::Named(colors) => Some(colors.len()),
            Palette::Count(k) => Some(*k),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliRequest {
    pub command: CommandKind,
    pub group_spec: String,
    pub palette: Palette,
    pub composition: Option<Composition>,
    pub format: Format,
    pub limit: usize,
    pub max_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Limit(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Limit(_) => 2,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        if e.is_limit() {
            CliError::Limit(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::LimitExceeded { .. } => CliError::Limit(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<InventoryError> for CliError {
    fn from(e: InventoryError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliRequest {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let (command, opts) = match cli.command {
            Command::CycleIndex(o) => (CommandKind::CycleIndex, o),
            Command::Inventory(o) => (CommandKind::Inventory, o),
            Command::Count(o) => (CommandKind::Count, o),
            Command::Coeff(o) => (CommandKind::Coeff, o),
            Command::Orbits(o) => (CommandKind::Orbits, o),
            Command::Group(o) => (CommandKind::Group, o),
        };
        let palette = match (&opts.colors, opts.num_colors) {
            (Some(text), _) => Palette::Named(
                ColorSet::parse_list(text)
                    .map_err(|e| CliError::Usage(format!("--colors {text:?}: {e}")))?,
            ),
            (None, Some(0)) => {
                return Err(CliError::Usage("--num-colors must be at least 1".into()))
            }
            (None, Some(k)) => Palette::Count(k),
            (None, None) => Palette::None,
        };
        let composition = opts
            .composition
            .as_deref()
            .map(Composition::parse)
            .transpose()?;
        if opts.limit == 0 || opts.max_order == 0 {
            return Err(CliError::Usage(
                "--limit and --max-order must be positive".into(),
            ));
        }
        Ok(CliRequest {
            command,
            group_spec: opts.group,
            palette,
            composition,
            format: opts.format,
            limit: opts.limit,
            max_order: opts.max_order,
        })
    }

    fn require_colors(&self) -> Result<ColorSet, CliError> {
        self.palette.names()?.ok_or_else(|| {
            CliError::Usage(format!(
                "{} requires --colors or --num-colors",
                self.command
            ))
        })
    }
}

/// Parses command-line arguments (including the program name) and runs them.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match CliRequest::from_cli(cli) {
        Ok(request) => run(&request),
        Err(e) => failure(&e),
    }
}

fn failure(e: &CliError) -> Outcome {
    Outcome {
        code: e.exit_code(),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

pub fn run(request: &CliRequest) -> Outcome {
    match execute(request) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => failure(&e),
    }
}

fn execute(request: &CliRequest) -> Result<String, CliError> {
    let spec: GroupSpec = request.group_spec.parse()?;
    let group = spec.build(request.max_order)?;
    let body = match request.command {
        CommandKind::CycleIndex => {
            let order = cycle_variables(group.degree());
            let ci = cycle_index(&group);
            match request.format {
                Format::Text => return Ok(line(ci.render(&order))),
                Format::Json => ResultBody::Polynomial {
                    polynomial: ci.to_records(&order),
                },
            }
        }
        CommandKind::Inventory => {
            let colors = request.require_colors()?;
            let inventory = pattern_inventory(&group, &colors);
            match request.format {
                Format::Text => return Ok(line(inventory.render(colors.names()))),
                Format::Json => ResultBody::Polynomial {
                    polynomial: inventory.to_records(colors.names()),
                },
            }
        }
        CommandKind::Count => {
            let k = request
                .palette
                .count()
                .ok_or_else(|| CliError::Usage("count requires --colors or --num-colors".into()))?;
            let count = count_distinct(&group, k)?;
            match request.format {
                Format::Text => return Ok(line(count.to_string())),
                Format::Json => ResultBody::count(&count),
            }
        }
        CommandKind::Coeff => {
            let colors = request.require_colors()?;
            let composition = request
                .composition
                .as_ref()
                .ok_or_else(|| CliError::Usage("coeff requires --composition".into()))?;
            let inventory = pattern_inventory(&group, &colors);
            let count = coefficient_for(&inventory, &colors, group.degree(), composition)
                .map_err(|e| CliError::Usage(format!("--composition {composition}: {e}")))?;
            match request.format {
                Format::Text => return Ok(line(count.to_string())),
                Format::Json => ResultBody::count(&count),
            }
        }
        CommandKind::Orbits => {
            let colors = request.require_colors()?;
            let records = orbit_records(&group, &colors, request.limit)?;
            match request.format {
                Format::Text => {
                    return Ok(records
                        .iter()
                        .map(|r| {
                            let comp = colors
                                .names()
                                .iter()
                                .map(|c| format!("{c}={}", r.composition[c]))
                                .collect::<Vec<_>>()
                                .join(",");
                            format!("{} {} {}\n", r.representative, r.size, comp)
                        })
                        .collect())
                }
                Format::Json => ResultBody::Orbits { orbits: records },
            }
        }
        CommandKind::Group => {
            let elements: Vec<String> = group.iter().map(ToString::to_string).collect();
            match request.format {
                Format::Text => {
                    let mut out = format!("order: {}\ndegree: {}\n", group.order(), group.degree());
                    for e in elements {
                        out.push_str(&e);
                        out.push('\n');
                    }
                    return Ok(out);
                }
                Format::Json => ResultBody::Elements { elements },
            }
        }
    };
    let report = Report {
        command: request.command.to_string(),
        group: GroupInfo {
            spec: request.group_spec.clone(),
            order: group.order() as u64,
            degree: group.degree() as u64,
        },
        result: body,
    };
    Ok(line(report.to_json()))
}

fn orbit_records(
    group: &PermutationGroup,
    colors: &ColorSet,
    limit: usize,
) -> Result<Vec<OrbitRecord>, CliError> {
    Ok(enumerate_orbits(group, colors.len(), limit)?
        .iter()
        .map(|orbit| {
            let rep = orbit.representative();
            let comp = rep.composition(colors);
            OrbitRecord {
                representative: colors.render(rep.assignment()),
                size: orbit.len() as u64,
                composition: colors
                    .names()
                    .iter()
                    .map(|c| (c.clone(), u64::from(comp.get(c))))
                    .collect::<BTreeMap<_, _>>(),
            }
        })
        .collect())
}

fn line(mut s: String) -> String {
    s.push('\n');
    s
}
