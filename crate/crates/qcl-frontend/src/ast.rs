use std::fmt;

/// A parsed source file: a sequence of procedure definitions.
#[derive(Debug, Clone, PartialEq)]
pub struct Program {
    pub procedures: Vec<ProcDef>,
}

impl Program {
    pub fn procedure(&self, name: &str) -> Option<&ProcDef> {
        self.procedures.iter().find(|p| p.name == name)
    }

    /// Entry-point convention: a zero-parameter procedure named `main` if
    /// present, otherwise the last zero-parameter procedure in the file.
    pub fn default_entry(&self) -> Option<&str> {
        if let Some(p) = self
            .procedures
            .iter()
            .find(|p| p.name == "main" && p.params.is_empty())
        {
            return Some(&p.name);
        }
        self.procedures
            .iter()
            .rev()
            .find(|p| p.params.is_empty())
            .map(|p| p.name.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProcDef {
    pub name: String,
    pub params: Vec<Param>,
    pub body: Block,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamType {
    Int,
    Qureg,
    Quvoid,
}

impl ParamType {
    pub fn as_str(&self) -> &'static str {
        match self {
            ParamType::Int => "int",
            ParamType::Qureg => "qureg",
            ParamType::Quvoid => "quvoid",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Param {
    pub ty: ParamType,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Block {
    pub stmts: Vec<Stmt>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Stmt {
    /// `int name;` or `int name = expr;`
    DeclInt {
        name: String,
        init: Option<Expr>,
    },
    /// `qureg name[width];`
    DeclReg {
        name: String,
        width: Expr,
    },
    /// `name = expr;`
    Assign {
        name: String,
        value: Expr,
    },
    /// `for var = from to to { ... }`, inclusive bounds.
    For {
        var: String,
        from: Expr,
        to: Expr,
        body: Block,
    },
    If {
        cond: Expr,
        then_branch: Block,
        else_branch: Option<Block>,
    },
    /// `{ ... } until cond;`: body runs at least once, repeats while the
    /// condition is false.
    Until {
        body: Block,
        cond: Expr,
    },
    /// `name(args);` or, inverted, `!name(args);`
    Call {
        name: String,
        args: Vec<Expr>,
        inverted: bool,
    },
    /// `input "prompt", var;`
    Input {
        prompt: Option<String>,
        var: String,
    },
    /// `print a, b;`: space-joined, newline-terminated. `print;` prints
    /// an empty line.
    Print {
        args: Vec<Expr>,
    },
    /// `measure reg, var;`
    Measure {
        reg: Expr,
        var: String,
    },
    Reset,
    Block(Block),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(i64),
    Str(String),
    Var(String),
    /// `#name`: width of a register.
    Width(String),
    /// `name[expr]`: one qubit of a register.
    Index {
        base: String,
        index: Box<Expr>,
    },
    Unary {
        op: UnaryOp,
        operand: Box<Expr>,
    },
    Binary {
        op: BinOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
    /// Builtin function call in expression position.
    Call {
        name: String,
        args: Vec<Expr>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryOp {
    Neg,
    Not,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Eq,
}

impl BinOp {
    fn glyph(&self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
            BinOp::Eq => "==",
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            BinOp::Eq => 1,
            BinOp::Add | BinOp::Sub => 2,
            BinOp::Mul | BinOp::Div => 3,
            BinOp::Pow => 5,
        }
    }
}

// Pretty-printing. The output reparses to a structurally identical tree:
// parentheses are inserted exactly where the precedence demands them.

const UNARY_PRECEDENCE: u8 = 4;

fn write_expr(f: &mut fmt::Formatter<'_>, expr: &Expr, parent: u8) -> fmt::Result {
    match expr {
        Expr::Int(v) => write!(f, "{v}"),
        Expr::Str(s) => write!(f, "\"{s}\""),
        Expr::Var(name) => write!(f, "{name}"),
        Expr::Width(name) => write!(f, "#{name}"),
        Expr::Index { base, index } => {
            write!(f, "{base}[")?;
            write_expr(f, index, 0)?;
            write!(f, "]")
        }
        Expr::Unary { op, operand } => {
            let needs_parens = parent > UNARY_PRECEDENCE;
            if needs_parens {
                write!(f, "(")?;
            }
            match op {
                UnaryOp::Neg => write!(f, "-")?,
                UnaryOp::Not => write!(f, "not ")?,
            }
            write_expr(f, operand, UNARY_PRECEDENCE)?;
            if needs_parens {
                write!(f, ")")?;
            }
            Ok(())
        }
        Expr::Binary { op, lhs, rhs } => {
            let prec = op.precedence();
            let needs_parens = prec < parent;
            if needs_parens {
                write!(f, "(")?;
            }
            // Left-associative operators bind their right child one level
            // tighter; `^` is right-associative and does the reverse; `==`
            // does not chain, so both of its children need the bump.
            let (lp, rp) = match op {
                BinOp::Pow => (prec + 1, prec),
                BinOp::Eq => (prec + 1, prec + 1),
                _ => (prec, prec + 1),
            };
            write_expr(f, lhs, lp)?;
            write!(f, " {} ", op.glyph())?;
            write_expr(f, rhs, rp)?;
            if needs_parens {
                write!(f, ")")?;
            }
            Ok(())
        }
        Expr::Call { name, args } => {
            write!(f, "{name}(")?;
            for (i, arg) in args.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write_expr(f, arg, 0)?;
            }
            write!(f, ")")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, self, 0)
    }
}

fn indent(f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
    for _ in 0..depth {
        write!(f, "    ")?;
    }
    Ok(())
}

fn write_block(f: &mut fmt::Formatter<'_>, block: &Block, depth: usize) -> fmt::Result {
    writeln!(f, "{{")?;
    for stmt in &block.stmts {
        write_stmt(f, stmt, depth + 1)?;
    }
    indent(f, depth)?;
    write!(f, "}}")
}

fn write_stmt(f: &mut fmt::Formatter<'_>, stmt: &Stmt, depth: usize) -> fmt::Result {
    indent(f, depth)?;
    match stmt {
        Stmt::DeclInt { name, init } => match init {
            Some(expr) => writeln!(f, "int {name} = {expr};"),
            None => writeln!(f, "int {name};"),
        },
        Stmt::DeclReg { name, width } => writeln!(f, "qureg {name}[{width}];"),
        Stmt::Assign { name, value } => writeln!(f, "{name} = {value};"),
        Stmt::For {
            var,
            from,
            to,
            body,
        } => {
            write!(f, "for {var} = {from} to {to} ")?;
            write_block(f, body, depth)?;
            writeln!(f)
        }
        Stmt::If {
            cond,
            then_branch,
            else_branch,
        } => {
            write!(f, "if {cond} ")?;
            write_block(f, then_branch, depth)?;
            if let Some(else_branch) = else_branch {
                write!(f, " else ")?;
                write_block(f, else_branch, depth)?;
            }
            writeln!(f)
        }
        Stmt::Until { body, cond } => {
            write_block(f, body, depth)?;
            writeln!(f, " until {cond};")
        }
        Stmt::Call {
            name,
            args,
            inverted,
        } => {
            if *inverted {
                write!(f, "!")?;
            }
            write!(f, "{name}(")?;
            for (i, arg) in args.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{arg}")?;
            }
            writeln!(f, ");")
        }
        Stmt::Input { prompt, var } => match prompt {
            Some(p) => writeln!(f, "input \"{p}\", {var};"),
            None => writeln!(f, "input {var};"),
        },
        Stmt::Print { args } => {
            if args.is_empty() {
                writeln!(f, "print;")
            } else {
                write!(f, "print ")?;
                for (i, arg) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{arg}")?;
                }
                writeln!(f, ";")
            }
        }
        Stmt::Measure { reg, var } => writeln!(f, "measure {reg}, {var};"),
        Stmt::Reset => writeln!(f, "reset;"),
        Stmt::Block(block) => {
            write_block(f, block, depth)?;
            writeln!(f)
        }
    }
}

impl fmt::Display for ProcDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "procedure {}(", self.name)?;
        for (i, param) in self.params.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{} {}", param.ty.as_str(), param.name)?;
        }
        write!(f, ") ")?;
        write_block(f, &self.body, 0)?;
        writeln!(f)
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, proc_def) in self.procedures.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{proc_def}")?;
        }
        Ok(())
    }
}
