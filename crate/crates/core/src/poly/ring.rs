use std::sync::Arc;

use serde::Serialize;

use super::{Poly, MAX_VARS};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VarClass {
    /// One indeterminate per vertex on the matrix diagonal.
    Diagonal,
    /// An unknown distance in a supergraph.
    Parameter,
    Auxiliary,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub class: VarClass,
}

impl Variable {
    /// Classifies by name: `x..` is diagonal, `y<k>` a parameter, anything
    /// else auxiliary.
    pub fn named(name: &str) -> Variable {
        let class = if name.starts_with('x') {
            VarClass::Diagonal
        } else if name.len() > 1 && name.starts_with('y') && name[1..].bytes().all(|b| b.is_ascii_digit()) {
            VarClass::Parameter
        } else {
            VarClass::Auxiliary
        };
        Variable { name: name.to_string(), class }
    }
}

/// An ordered list of variables shared by the polynomials of one computation.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<Variable>,
}

impl Ring {
    pub fn new(vars: Vec<Variable>) -> Result<Arc<Ring>> {
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables(vars.len()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].iter().any(|w| w.name == v.name) {
                return Err(Error::PolyParse(format!("duplicate variable {:?}", v.name)));
            }
        }
        Ok(Arc::new(Ring { vars }))
    }

    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Arc<Ring>> {
        Ring::new(names.iter().map(|n| Variable::named(n.as_ref())).collect())
    }

    /// `x0, .., x{n-1}`: the ring of a generalized distance matrix.
    pub fn diagonal(n: usize) -> Result<Arc<Ring>> {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        Ring::from_names(&names)
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i].name
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v.name == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn same(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }

    pub fn var(self: &Arc<Ring>, name: &str) -> Result<Poly> {
        Ok(Poly::variable(self, self.index_of(name)?))
    }
}
