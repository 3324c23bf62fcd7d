use std::collections::{HashMap, VecDeque};
use std::f64::consts::PI;

use statevec_core::{MachineState, RegisterHandle};

use crate::ast::{BinOp, Block, Expr, ParamType, ProcDef, Program, Stmt, UnaryOp};
use crate::error::RuntimeError;

/// Guard on `{...} until cond;` loops: body executions allowed before the
/// loop is declared stuck.
pub const DEFAULT_ROUND_LIMIT: usize = 1000;

/// A runtime value: classical integer, transient real, string literal, or
/// a handle to machine qubits.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Real(f64),
    Str(String),
    Register(RegisterHandle),
}

impl Value {
    fn type_name(&self) -> &'static str {
        match self {
            Value::Int(_) => "int",
            Value::Real(_) => "real",
            Value::Str(_) => "string",
            Value::Register(_) => "qureg",
        }
    }
}

/// One recorded primitive gate, by concrete machine qubit indices.
#[derive(Debug, Clone, PartialEq)]
pub enum TracedGate {
    Hadamard { qubit: usize },
    Not { qubit: usize },
    ControlledNot { target: usize, controls: Vec<usize> },
    Phase { angle: f64, qubits: Vec<usize> },
}

impl TracedGate {
    fn inverse(&self) -> TracedGate {
        match self {
            TracedGate::Phase { angle, qubits } => TracedGate::Phase {
                angle: -angle,
                qubits: qubits.clone(),
            },
            // H, X and multi-controlled X are their own inverses.
            other => other.clone(),
        }
    }
}

/// Ordered record of primitive unitary gates; never holds measure, reset
/// or input effects.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GateTrace {
    gates: Vec<TracedGate>,
}

impl GateTrace {
    pub fn gates(&self) -> &[TracedGate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }
}

/// What a program run produced: every printed line (without trailing
/// newline) and every measured value, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExecutionResult {
    pub output: Vec<String>,
    pub measurements: Vec<u64>,
}

/// Lexical frame of one procedure activation: a stack of block scopes.
struct Frame {
    scopes: Vec<HashMap<String, Value>>,
}

pub struct Interpreter<'p, 'm> {
    program: &'p Program,
    machine: &'m mut MachineState,
    input_feed: VecDeque<i64>,
    output: Vec<String>,
    measurements: Vec<u64>,
    round_limit: usize,
    frames: Vec<Frame>,
    active_calls: Vec<String>,
    /// While `Some`, primitive gates are recorded instead of applied.
    trace: Option<GateTrace>,
}

/// Run `entry` (which must take no parameters) against `machine`, feeding
/// `input` statements from `input_feed`.
pub fn interpret(
    program: &Program,
    entry: &str,
    machine: &mut MachineState,
    input_feed: Vec<i64>,
) -> Result<ExecutionResult, RuntimeError> {
    Interpreter::new(program, machine)
        .with_input_feed(input_feed)
        .run(entry)
}

impl<'p, 'm> Interpreter<'p, 'm> {
    pub fn new(program: &'p Program, machine: &'m mut MachineState) -> Self {
        Self {
            program,
            machine,
            input_feed: VecDeque::new(),
            output: Vec::new(),
            measurements: Vec::new(),
            round_limit: DEFAULT_ROUND_LIMIT,
            frames: Vec::new(),
            active_calls: Vec::new(),
            trace: None,
        }
    }

    pub fn with_input_feed(mut self, feed: impl IntoIterator<Item = i64>) -> Self {
        self.input_feed = feed.into_iter().collect();
        self
    }

    pub fn with_round_limit(mut self, limit: usize) -> Self {
        self.round_limit = limit;
        self
    }

    pub fn run(mut self, entry: &str) -> Result<ExecutionResult, RuntimeError> {
        let proc_def = self
            .program
            .procedure(entry)
            .ok_or_else(|| RuntimeError::UnboundName(entry.to_string()))?;
        if !proc_def.params.is_empty() {
            return Err(RuntimeError::TypeMismatch(format!(
                "entry procedure `{entry}` must take no arguments"
            )));
        }
        self.call_procedure(entry, Vec::new(), false)?;
        Ok(self.finish())
    }

    /// Call one procedure or builtin gate with pre-evaluated arguments,
    /// forward or inverted. Exposed so harnesses can drive procedures on
    /// registers they allocated themselves.
    pub fn call_procedure(
        &mut self,
        name: &str,
        args: Vec<Value>,
        inverted: bool,
    ) -> Result<(), RuntimeError> {
        if matches!(name, "H" | "Not" | "CNot" | "CPhase") {
            return self.call_builtin_gate(name, args, inverted);
        }
        let proc_def = self
            .program
            .procedure(name)
            .ok_or_else(|| RuntimeError::UnboundName(name.to_string()))?;
        if self.active_calls.iter().any(|active| active == name) {
            return Err(RuntimeError::RecursionUnsupported(name.to_string()));
        }
        let bindings = self.bind_parameters(proc_def, args)?;

        self.active_calls.push(name.to_string());
        self.frames.push(Frame {
            scopes: vec![bindings],
        });
        let result = if inverted {
            self.run_body_inverted(&proc_def.body)
        } else {
            self.exec_block(&proc_def.body)
        };
        self.frames.pop();
        self.active_calls.pop();
        result
    }

    pub fn finish(self) -> ExecutionResult {
        ExecutionResult {
            output: self.output,
            measurements: self.measurements,
        }
    }

    fn bind_parameters(
        &mut self,
        proc_def: &ProcDef,
        args: Vec<Value>,
    ) -> Result<HashMap<String, Value>, RuntimeError> {
        if proc_def.params.len() != args.len() {
            return Err(RuntimeError::TypeMismatch(format!(
                "`{}` takes {} argument(s), got {}",
                proc_def.name,
                proc_def.params.len(),
                args.len()
            )));
        }
        let mut bindings = HashMap::new();
        for (param, arg) in proc_def.params.iter().zip(args) {
            let value = match param.ty {
                ParamType::Int => Value::Int(coerce_int(&arg)?),
                ParamType::Qureg | ParamType::Quvoid => match arg {
                    Value::Register(_) => arg,
                    other => {
                        return Err(RuntimeError::TypeMismatch(format!(
                            "parameter `{}` of `{}` needs a register, got {}",
                            param.name,
                            proc_def.name,
                            other.type_name()
                        )));
                    }
                },
            };
            bindings.insert(param.name.clone(), value);
        }
        Ok(bindings)
    }

    /// Adjoint of a user procedure: forward-evaluate the body recording
    /// primitive gates without applying them, then emit the record
    /// reversed with every gate inverted.
    fn run_body_inverted(&mut self, body: &Block) -> Result<(), RuntimeError> {
        let saved = self.trace.take();
        self.trace = Some(GateTrace::default());
        let forward = self.exec_block(body);
        let recorded = self.trace.take().expect("trace mode was just enabled");
        self.trace = saved;
        forward?;
        for gate in recorded.gates().iter().rev() {
            self.emit_gate(gate.inverse())?;
        }
        Ok(())
    }

    fn call_builtin_gate(
        &mut self,
        name: &str,
        args: Vec<Value>,
        inverted: bool,
    ) -> Result<(), RuntimeError> {
        match name {
            // H and Not are self-adjoint, so the inverted call is the call.
            "H" | "Not" => {
                let reg = one_register_arg(name, args)?;
                for &qubit in reg.indices() {
                    let gate = if name == "H" {
                        TracedGate::Hadamard { qubit }
                    } else {
                        TracedGate::Not { qubit }
                    };
                    self.emit_gate(gate)?;
                }
                Ok(())
            }
            "CNot" => {
                let [target, controls] = two_register_args(name, args)?;
                if target.width() != 1 {
                    return Err(RuntimeError::Machine(
                        statevec_core::Error::InvalidRegister(format!(
                            "CNot target must be one qubit, got width {}",
                            target.width()
                        )),
                    ));
                }
                if target.overlaps(&controls) {
                    return Err(RuntimeError::Machine(statevec_core::Error::Overlap(
                        "CNot target appears among the controls".into(),
                    )));
                }
                self.emit_gate(TracedGate::ControlledNot {
                    target: target.indices()[0],
                    controls: controls.indices().to_vec(),
                })
            }
            "CPhase" => {
                if args.len() != 2 {
                    return Err(RuntimeError::TypeMismatch(format!(
                        "CPhase takes an angle and a register, got {} argument(s)",
                        args.len()
                    )));
                }
                let mut args = args.into_iter();
                let angle = coerce_real(&args.next().unwrap())?;
                let reg = match args.next().unwrap() {
                    Value::Register(reg) => reg,
                    other => {
                        return Err(RuntimeError::TypeMismatch(format!(
                            "CPhase needs a register, got {}",
                            other.type_name()
                        )));
                    }
                };
                let angle = if inverted { -angle } else { angle };
                self.emit_gate(TracedGate::Phase {
                    angle,
                    qubits: reg.indices().to_vec(),
                })
            }
            _ => unreachable!("builtin gate dispatch"),
        }
    }

    fn emit_gate(&mut self, gate: TracedGate) -> Result<(), RuntimeError> {
        match self.trace.as_mut() {
            Some(trace) => {
                trace.gates.push(gate);
                Ok(())
            }
            None => self.apply_gate(&gate),
        }
    }

    fn apply_gate(&mut self, gate: &TracedGate) -> Result<(), RuntimeError> {
        match gate {
            TracedGate::Hadamard { qubit } => self
                .machine
                .apply_hadamard(&RegisterHandle::new(vec![*qubit]))?,
            TracedGate::Not { qubit } => {
                self.machine.apply_not(&RegisterHandle::new(vec![*qubit]))?
            }
            TracedGate::ControlledNot { target, controls } => self.machine.apply_cnot(
                &RegisterHandle::new(vec![*target]),
                &RegisterHandle::new(controls.clone()),
            )?,
            TracedGate::Phase { angle, qubits } => self
                .machine
                .apply_cphase(*angle, &RegisterHandle::new(qubits.clone()))?,
        }
        Ok(())
    }

    fn exec_block(&mut self, block: &Block) -> Result<(), RuntimeError> {
        self.current_frame().scopes.push(HashMap::new());
        let mut result = Ok(());
        for stmt in &block.stmts {
            result = self.exec_stmt(stmt);
            if result.is_err() {
                break;
            }
        }
        self.current_frame().scopes.pop();
        result
    }

    fn exec_stmt(&mut self, stmt: &Stmt) -> Result<(), RuntimeError> {
        match stmt {
            Stmt::DeclInt { name, init } => {
                let value = match init {
                    Some(expr) => {
                        let v = self.eval(expr)?;
                        coerce_int(&v)?
                    }
                    None => 0,
                };
                self.declare(name, Value::Int(value));
            }
            Stmt::DeclReg { name, width } => {
                self.forbid_in_trace("qureg allocation")?;
                let w = self.eval(width).and_then(|v| coerce_int(&v))?;
                if w < 0 {
                    return Err(RuntimeError::TypeMismatch(format!(
                        "register width must be non-negative, got {w}"
                    )));
                }
                let handle = self.machine.allocate(w as usize)?;
                self.declare(name, Value::Register(handle));
            }
            Stmt::Assign { name, value } => {
                let v = self.eval(value)?;
                self.assign_existing(name, v)?;
            }
            Stmt::For {
                var,
                from,
                to,
                body,
            } => {
                let from = self.eval(from).and_then(|v| coerce_int(&v))?;
                let to = self.eval(to).and_then(|v| coerce_int(&v))?;
                for i in from..=to {
                    self.assign_existing(var, Value::Int(i))?;
                    self.exec_block(body)?;
                }
            }
            Stmt::If {
                cond,
                then_branch,
                else_branch,
            } => {
                if self.eval_condition(cond)? {
                    self.exec_block(then_branch)?;
                } else if let Some(else_branch) = else_branch {
                    self.exec_block(else_branch)?;
                }
            }
            Stmt::Until { body, cond } => {
                let mut executions = 0usize;
                loop {
                    if executions >= self.round_limit {
                        return Err(RuntimeError::RoundLimit(self.round_limit));
                    }
                    self.exec_block(body)?;
                    executions += 1;
                    if self.eval_condition(cond)? {
                        break;
                    }
                }
            }
            Stmt::Call {
                name,
                args,
                inverted,
            } => {
                let mut values = Vec::with_capacity(args.len());
                for arg in args {
                    values.push(self.eval(arg)?);
                }
                self.call_procedure(name, values, *inverted)?;
            }
            Stmt::Input { prompt, var } => {
                self.forbid_in_trace("input")?;
                let value = self
                    .input_feed
                    .pop_front()
                    .ok_or(RuntimeError::EmptyInputFeed)?;
                let line = match prompt {
                    Some(p) => format!("{p} {value}"),
                    None => value.to_string(),
                };
                self.output.push(line);
                self.assign_existing(var, Value::Int(value))?;
            }
            Stmt::Print { args } => {
                self.forbid_in_trace("print")?;
                let mut rendered = Vec::with_capacity(args.len());
                for arg in args {
                    let v = self.eval(arg)?;
                    rendered.push(render(&v)?);
                }
                self.output.push(rendered.join(" "));
            }
            Stmt::Measure { reg, var } => {
                self.forbid_in_trace("measure")?;
                let reg = match self.eval(reg)? {
                    Value::Register(reg) => reg,
                    other => {
                        return Err(RuntimeError::TypeMismatch(format!(
                            "measure needs a register, got {}",
                            other.type_name()
                        )));
                    }
                };
                let outcome = self.machine.measure(&reg)?;
                self.measurements.push(outcome.value);
                self.assign_existing(var, Value::Int(outcome.value as i64))?;
            }
            Stmt::Reset => {
                self.forbid_in_trace("reset")?;
                self.machine.reset();
            }
            Stmt::Block(block) => {
                self.exec_block(block)?;
            }
        }
        // In debug builds, re-check the machine invariant after every
        // statement (gates checked their own work; this catches misuse in
        // the evaluator itself).
        #[cfg(debug_assertions)]
        {
            let total = self.machine.total_probability();
            debug_assert!(
                (total - 1.0).abs() <= 1e-12,
                "statement left the state with norm {total}"
            );
        }
        Ok(())
    }

    fn forbid_in_trace(&self, what: &str) -> Result<(), RuntimeError> {
        if self.trace.is_some() {
            return Err(RuntimeError::NonUnitaryInverse(what.to_string()));
        }
        Ok(())
    }

    fn eval_condition(&mut self, expr: &Expr) -> Result<bool, RuntimeError> {
        let v = self.eval(expr)?;
        Ok(coerce_int(&v)? != 0)
    }

    fn eval(&mut self, expr: &Expr) -> Result<Value, RuntimeError> {
        match expr {
            Expr::Int(v) => Ok(Value::Int(*v)),
            Expr::Str(s) => Ok(Value::Str(s.clone())),
            Expr::Var(name) => match self.lookup(name) {
                Some(value) => Ok(value.clone()),
                None if name == "pi" => Ok(Value::Real(PI)),
                None => Err(RuntimeError::UnboundName(name.clone())),
            },
            Expr::Width(name) => match self.lookup(name) {
                Some(Value::Register(reg)) => Ok(Value::Int(reg.width() as i64)),
                Some(other) => Err(RuntimeError::TypeMismatch(format!(
                    "`#{name}` needs a register, `{name}` is {}",
                    other.type_name()
                ))),
                None => Err(RuntimeError::UnboundName(name.clone())),
            },
            Expr::Index { base, index } => {
                let idx = self.eval(index).and_then(|v| coerce_int(&v))?;
                match self.lookup(base) {
                    Some(Value::Register(reg)) => {
                        if idx < 0 || idx as usize >= reg.width() {
                            return Err(RuntimeError::IndexOutOfRange {
                                register: base.clone(),
                                index: idx,
                                width: reg.width(),
                            });
                        }
                        Ok(Value::Register(reg.qubit(idx as usize)))
                    }
                    Some(other) => Err(RuntimeError::TypeMismatch(format!(
                        "`{base}[...]` needs a register, `{base}` is {}",
                        other.type_name()
                    ))),
                    None => Err(RuntimeError::UnboundName(base.clone())),
                }
            }
            Expr::Unary { op, operand } => {
                let v = self.eval(operand)?;
                match op {
                    UnaryOp::Neg => match v {
                        Value::Int(i) => i
                            .checked_neg()
                            .map(Value::Int)
                            .ok_or_else(|| RuntimeError::Arithmetic("integer overflow".into())),
                        Value::Real(r) => Ok(Value::Real(-r)),
                        other => Err(RuntimeError::TypeMismatch(format!(
                            "cannot negate {}",
                            other.type_name()
                        ))),
                    },
                    UnaryOp::Not => Ok(Value::Int(if coerce_int(&v)? == 0 { 1 } else { 0 })),
                }
            }
            Expr::Binary { op, lhs, rhs } => {
                let a = self.eval(lhs)?;
                let b = self.eval(rhs)?;
                eval_binary(*op, &a, &b)
            }
            Expr::Call { name, args } => {
                let mut values = Vec::with_capacity(args.len());
                for arg in args {
                    values.push(self.eval(arg)?);
                }
                eval_builtin_function(self.program, name, &values)
            }
        }
    }

    fn current_frame(&mut self) -> &mut Frame {
        self.frames.last_mut().expect("a frame is always active")
    }

    fn lookup(&self, name: &str) -> Option<&Value> {
        let frame = self.frames.last()?;
        frame.scopes.iter().rev().find_map(|scope| scope.get(name))
    }

    fn declare(&mut self, name: &str, value: Value) {
        self.current_frame()
            .scopes
            .last_mut()
            .expect("a scope is always open")
            .insert(name.to_string(), value);
    }

    fn assign_existing(&mut self, name: &str, value: Value) -> Result<(), RuntimeError> {
        let frame = self.frames.last_mut().expect("a frame is always active");
        for scope in frame.scopes.iter_mut().rev() {
            if let Some(slot) = scope.get_mut(name) {
                match slot {
                    Value::Int(_) => {
                        *slot = Value::Int(coerce_int(&value)?);
                        return Ok(());
                    }
                    Value::Register(_) => {
                        return Err(RuntimeError::TypeMismatch(format!(
                            "cannot reassign quantum register `{name}`"
                        )));
                    }
                    other => {
                        return Err(RuntimeError::TypeMismatch(format!(
                            "cannot assign to `{name}` of type {}",
                            other.type_name()
                        )));
                    }
                }
            }
        }
        Err(RuntimeError::UnboundName(name.to_string()))
    }
}

fn render(value: &Value) -> Result<String, RuntimeError> {
    match value {
        Value::Int(i) => Ok(i.to_string()),
        Value::Real(r) => Ok(r.to_string()),
        Value::Str(s) => Ok(s.clone()),
        Value::Register(_) => Err(RuntimeError::TypeMismatch(
            "cannot print a quantum register".into(),
        )),
    }
}

fn coerce_int(value: &Value) -> Result<i64, RuntimeError> {
    match value {
        Value::Int(i) => Ok(*i),
        Value::Real(r) => {
            if r.fract() == 0.0 && r.abs() <= 2f64.powi(53) {
                Ok(*r as i64)
            } else {
                Err(RuntimeError::TypeMismatch(format!(
                    "expected an integer, got non-integral real {r}"
                )))
            }
        }
        other => Err(RuntimeError::TypeMismatch(format!(
            "expected an integer, got {}",
            other.type_name()
        ))),
    }
}

fn coerce_real(value: &Value) -> Result<f64, RuntimeError> {
    match value {
        Value::Int(i) => Ok(*i as f64),
        Value::Real(r) => Ok(*r),
        other => Err(RuntimeError::TypeMismatch(format!(
            "expected a number, got {}",
            other.type_name()
        ))),
    }
}

fn eval_binary(op: BinOp, a: &Value, b: &Value) -> Result<Value, RuntimeError> {
    if op == BinOp::Eq {
        let equal = match (a, b) {
            (Value::Int(x), Value::Int(y)) => x == y,
            (Value::Str(x), Value::Str(y)) => x == y,
            (Value::Register(_), _) | (_, Value::Register(_)) => {
                return Err(RuntimeError::TypeMismatch(
                    "registers cannot be compared with ==".into(),
                ));
            }
            (x, y) => coerce_real(x)? == coerce_real(y)?,
        };
        return Ok(Value::Int(if equal { 1 } else { 0 }));
    }

    match (a, b) {
        (Value::Int(x), Value::Int(y)) => match op {
            BinOp::Add => x.checked_add(*y).map(Value::Int).ok_or_else(overflow_error),
            BinOp::Sub => x.checked_sub(*y).map(Value::Int).ok_or_else(overflow_error),
            BinOp::Mul => x.checked_mul(*y).map(Value::Int).ok_or_else(overflow_error),
            // Integer division yields a real; it only appears under
            // floor/ceil in practice.
            BinOp::Div => {
                if *y == 0 {
                    Err(RuntimeError::Arithmetic("division by zero".into()))
                } else {
                    Ok(Value::Real(*x as f64 / *y as f64))
                }
            }
            BinOp::Pow => {
                if *y >= 0 {
                    let exp = u32::try_from(*y).map_err(|_| overflow_error())?;
                    x.checked_pow(exp)
                        .map(Value::Int)
                        .ok_or_else(overflow_error)
                } else {
                    Ok(Value::Real((*x as f64).powf(*y as f64)))
                }
            }
            BinOp::Eq => unreachable!("handled above"),
        },
        _ => {
            let x = coerce_real(a)?;
            let y = coerce_real(b)?;
            let r = match op {
                BinOp::Add => x + y,
                BinOp::Sub => x - y,
                BinOp::Mul => x * y,
                BinOp::Div => {
                    if y == 0.0 {
                        return Err(RuntimeError::Arithmetic("division by zero".into()));
                    }
                    x / y
                }
                BinOp::Pow => x.powf(y),
                BinOp::Eq => unreachable!("handled above"),
            };
            Ok(Value::Real(r))
        }
    }
}

fn overflow_error() -> RuntimeError {
    RuntimeError::Arithmetic("integer overflow".into())
}

fn one_register_arg(gate: &str, args: Vec<Value>) -> Result<RegisterHandle, RuntimeError> {
    if args.len() != 1 {
        return Err(RuntimeError::TypeMismatch(format!(
            "`{gate}` takes one register, got {} argument(s)",
            args.len()
        )));
    }
    match args.into_iter().next().unwrap() {
        Value::Register(reg) => Ok(reg),
        other => Err(RuntimeError::TypeMismatch(format!(
            "`{gate}` needs a register, got {}",
            other.type_name()
        ))),
    }
}

fn two_register_args(gate: &str, args: Vec<Value>) -> Result<[RegisterHandle; 2], RuntimeError> {
    if args.len() != 2 {
        return Err(RuntimeError::TypeMismatch(format!(
            "`{gate}` takes two registers, got {} argument(s)",
            args.len()
        )));
    }
    let mut regs = Vec::with_capacity(2);
    for arg in args {
        match arg {
            Value::Register(reg) => regs.push(reg),
            other => {
                return Err(RuntimeError::TypeMismatch(format!(
                    "`{gate}` needs registers, got {}",
                    other.type_name()
                )));
            }
        }
    }
    let mut iter = regs.into_iter();
    Ok([iter.next().unwrap(), iter.next().unwrap()])
}

fn eval_builtin_function(
    program: &Program,
    name: &str,
    args: &[Value],
) -> Result<Value, RuntimeError> {
    let arity = |n: usize| -> Result<(), RuntimeError> {
        if args.len() != n {
            return Err(RuntimeError::TypeMismatch(format!(
                "`{name}` takes {n} argument(s), got {}",
                args.len()
            )));
        }
        Ok(())
    };
    match name {
        "floor" => {
            arity(1)?;
            Ok(Value::Real(coerce_real(&args[0])?.floor()))
        }
        "ceil" => {
            arity(1)?;
            Ok(Value::Real(coerce_real(&args[0])?.ceil()))
        }
        "sqrt" => {
            arity(1)?;
            let x = coerce_real(&args[0])?;
            if x < 0.0 {
                return Err(RuntimeError::Arithmetic(format!(
                    "sqrt of negative number {x}"
                )));
            }
            Ok(Value::Real(x.sqrt()))
        }
        "log" => {
            arity(2)?;
            let x = coerce_real(&args[0])?;
            let base = coerce_real(&args[1])?;
            if x <= 0.0 || base <= 0.0 || base == 1.0 {
                return Err(RuntimeError::Arithmetic(format!(
                    "log({x}, {base}) is undefined"
                )));
            }
            // Dedicated routines for the common bases: exact on powers of
            // two, which the register-sizing formula depends on.
            let r = if base == 2.0 {
                x.log2()
            } else if base == 10.0 {
                x.log10()
            } else {
                x.ln() / base.ln()
            };
            Ok(Value::Real(r))
        }
        "bit" => {
            arity(2)?;
            let n = coerce_int(&args[0])?;
            let i = coerce_int(&args[1])?;
            if i < 0 {
                return Err(RuntimeError::Arithmetic(format!(
                    "bit index {i} is negative"
                )));
            }
            let bit = if i >= 64 { 0 } else { (n >> i) & 1 };
            Ok(Value::Int(bit))
        }
        _ => {
            if program.procedure(name).is_some() || matches!(name, "H" | "Not" | "CNot" | "CPhase")
            {
                Err(RuntimeError::TypeMismatch(format!(
                    "`{name}` is a procedure and produces no value"
                )))
            } else {
                Err(RuntimeError::UnboundName(name.to_string()))
            }
        }
    }
}
