//! End-to-end acceptance run. Each criterion prints one PASS/FAIL line with
//! its elapsed time against its limit.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pbasic::altchar::alt_table;
use pbasic::basicsets::{
    construct_alt_basic, construct_sym_basic, construct_wreath_basic, lambda_empty, verify_c_basic,
    verify_isometry_in, verify_osima_step_in,
};
use pbasic::decomp::{
    eps_column_action, eps_row_permutation, extract_dnp, relations_check, reorder_alt, transfer_to_alternating,
    validate_wedge, wedge_shape, LabeledIntMatrix,
};
use pbasic::intlinalg::IntMatrix;
use pbasic::partitions::{p_core, p_quotient, p_sign, MultiPartition, Partition};
use pbasic::symchar::{mn_value, p_blocks, sym_c_blocks, sym_table};
use pbasic::wreath::{base_group_l, base_group_n, middle_runner, wreath_table, WreathTable};

type Check = Result<(), String>;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(id: u32, name: &str, limit: Duration, f: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let within = elapsed <= limit;
    let pass = result.is_ok() && within;
    let detail = match (&result, within) {
        (Err(e), _) => format!(" - {e}"),
        (Ok(()), false) => " - over time limit".to_string(),
        _ => String::new(),
    };
    println!(
        "criterion {id:>2} {}: {name} ({:.3}s, limit {}s){detail}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs_f64()
    );
    pass
}

fn quotient_of_conjugate_law(lambda: &Partition, prime: usize) -> bool {
    let q = p_quotient(lambda, prime);
    p_quotient(&lambda.conjugate(), prime) == q.reversed().map(Partition::conjugate)
}

fn c1() -> Check {
    let lambda = p("4,4,4,3,2");
    let q = p_quotient(&lambda, 3);
    let want: MultiPartition = "(1|2|1,1)".parse().unwrap();
    ensure(q == want, || format!("quotient {q}"))?;
    let qc = p_quotient(&lambda.conjugate(), 3);
    let want_c: MultiPartition = "(2|1,1|1)".parse().unwrap();
    ensure(qc == want_c, || format!("conjugate quotient {qc}"))
}

fn c2() -> Check {
    for n in 0..=15 {
        for prime in [3, 5, 7] {
            for lambda in Partition::all(n) {
                ensure(quotient_of_conjugate_law(&lambda, prime), || format!("{lambda} at p={prime}"))?;
            }
        }
    }
    Ok(())
}

fn c3() -> Check {
    for n in 1..=15 {
        for prime in [3, 5, 7] {
            let r = middle_runner(prime) - 1;
            for lambda in Partition::all(n).into_iter().filter(Partition::is_self_conjugate) {
                let regular = lambda.bar().unwrap().is_p_regular(prime);
                let empty = p_quotient(&lambda, prime).component(r).is_empty();
                ensure(regular == empty, || format!("{lambda} at p={prime}"))?;
            }
        }
    }
    Ok(())
}

fn c4() -> Check {
    for n in 1..=10 {
        ensure(sym_table(n).verify_orthogonality(), || format!("S{n}"))?;
    }
    for n in 2..=9 {
        ensure(alt_table(n).map_err(|e| e.to_string())?.verify_orthogonality().map_err(|e| e.to_string())?, || format!("A{n}"))?;
    }
    for (prime, w) in [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1)] {
        let t = wreath_table(&base_group_n(prime).unwrap(), w);
        ensure(t.verify_orthogonality().map_err(|e| e.to_string())?, || format!("G({prime},{w})"))?;
    }
    Ok(())
}

fn c5() -> Check {
    for n in 1..=8 {
        for prime in [3, 5] {
            let t = sym_table(n);
            let graph: BTreeSet<BTreeSet<Partition>> = sym_c_blocks(&t, &t.p_regular_class_indices(prime))
                .into_iter()
                .map(|b| b.into_iter().map(|i| t.characters()[i].clone()).collect())
                .collect();
            let cores: BTreeSet<BTreeSet<Partition>> =
                p_blocks(n, prime).into_iter().map(|b| b.members.into_iter().collect()).collect();
            ensure(graph == cores, || format!("n={n} p={prime}"))?;
        }
    }
    Ok(())
}

fn c6() -> Check {
    for (prime, w) in [(3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2)] {
        let claim = construct_wreath_basic(prime, w).map_err(|e| e.to_string())?;
        let v = verify_c_basic(&claim, None).map_err(|e| e.to_string())?;
        ensure(v.holds, || format!("G({prime},{w}): {:?}", v.witness))?;
    }
    Ok(())
}

fn c7() -> Check {
    let mut tables: HashMap<(usize, usize, bool), WreathTable> = HashMap::new();
    for n in 1..=10 {
        let sym = sym_table(n);
        for prime in [3, 5] {
            for block in p_blocks(n, prime).into_iter().filter(|b| b.weight > 0) {
                for osima in [false, true] {
                    let table = tables.entry((prime, block.weight, osima)).or_insert_with(|| {
                        let base = if osima { base_group_l(prime) } else { base_group_n(prime) };
                        wreath_table(&base.unwrap(), block.weight)
                    });
                    let report = if osima {
                        verify_osima_step_in(&block, &sym, table)
                    } else {
                        verify_isometry_in(&block, &sym, table)
                    }
                    .map_err(|e| e.to_string())?;
                    ensure(report.verdict, || {
                        format!("n={n} p={prime} core {} osima={osima}: {:?}", block.core, report.violation)
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn c8() -> Check {
    for n in 1..=12 {
        for prime in [3, 5, 7] {
            let claim = construct_sym_basic(n, prime).map_err(|e| e.to_string())?;
            let v = verify_c_basic(&claim, None).map_err(|e| e.to_string())?;
            ensure(v.holds, || format!("S{n} p={prime}: {:?}", v.witness))?;
            let members: HashSet<Partition> = lambda_empty(n, prime).unwrap().into_iter().collect();
            for lambda in &members {
                ensure(members.contains(&lambda.conjugate()), || format!("ε-stability fails at {lambda}"))?;
            }
            for lambda in Partition::all(n).into_iter().filter(Partition::is_self_conjugate) {
                let regular = lambda.bar().unwrap().is_p_regular(prime);
                ensure(members.contains(&lambda) == regular, || format!("self-conjugate {lambda} at p={prime}"))?;
            }
        }
    }
    Ok(())
}

fn c9() -> Check {
    for n in 2..=10 {
        for prime in [3, 5] {
            let claim = construct_alt_basic(n, prime).map_err(|e| e.to_string())?;
            let v = verify_c_basic(&claim, None).map_err(|e| e.to_string())?;
            ensure(v.holds, || format!("A{n} p={prime}: {:?}", v.witness))?;
        }
    }
    Ok(())
}

fn c10() -> Check {
    let m = LabeledIntMatrix::parse(include_str!("../fixtures/s6_p3.mat")).map_err(|e| e.to_string())?;
    ensure(wedge_shape(&m).is_none(), || "fixture has a wedge certificate".into())?;
    let perm = eps_row_permutation(&m).map_err(|e| e.to_string())?;
    let pairing = eps_column_action(&m, &perm).map_err(|e| e.to_string())?;
    let (tp, tq) = (pairing.fixed_rows().len(), pairing.fixed_cols().len());
    ensure(tp == tq, || format!("Tr(P) = {tp}, Tr(Q) = {tq}"))
}

/// An ε-equivariant unimodular `D_B` built block-lower-triangular over
/// orbits, optionally twisted on the fixed columns, then shuffled.
struct RandomCase {
    d_b: LabeledIntMatrix,
    row_perm: Vec<usize>,
    col_perm: Vec<usize>,
}

fn random_case(rng: &mut ChaCha8Rng) -> RandomCase {
    let m = rng.gen_range(1..=12);
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut used = 0;
    while used < m {
        if used + 2 <= m && rng.gen_bool(0.5) {
            orbits.push(vec![used, used + 1]);
            used += 2;
        } else {
            orbits.push(vec![used]);
            used += 1;
        }
    }
    let mut invol = vec![0; m];
    for o in &orbits {
        invol[o[0]] = *o.last().unwrap();
        invol[*o.last().unwrap()] = o[0];
    }
    let mut d = vec![vec![0i64; m]; m];
    for (a, ra) in orbits.iter().enumerate() {
        for (b, cb) in orbits.iter().enumerate() {
            if a == b {
                for &i in ra {
                    d[i][i] = 1;
                }
            } else if a > b {
                let (x, y) = (rng.gen_range(0..3), rng.gen_range(0..3));
                for (ki, &i) in ra.iter().enumerate() {
                    for (kj, &j) in cb.iter().enumerate() {
                        let same = ra.len() == 1 || cb.len() == 1 || ki == kj;
                        d[i][j] = if same { x } else { y };
                    }
                }
            }
        }
    }
    let fixed: Vec<usize> = (0..m).filter(|&i| invol[i] == i).collect();
    if fixed.len() >= 2 && rng.gen_bool(0.5) {
        for _ in 0..rng.gen_range(1..=3) {
            let (a, b) = (*fixed.choose(rng).unwrap(), *fixed.choose(rng).unwrap());
            if a != b {
                for row in d.iter_mut() {
                    row[b] += row[a];
                }
            }
        }
    }
    let mut rows: Vec<usize> = (0..m).collect();
    let mut cols: Vec<usize> = (0..m).collect();
    rows.shuffle(rng);
    cols.shuffle(rng);
    let pos = |order: &[usize], x: usize| order.iter().position(|&y| y == x).unwrap();
    let entries: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| d[i][j]).collect()).collect();
    let rl: Vec<String> = rows.iter().map(|i| format!("r{i}")).collect();
    let cl: Vec<String> = cols.iter().map(|j| format!("c{j}")).collect();
    let d_b = LabeledIntMatrix::new(rl, cl, IntMatrix::from_i64(&entries, m).unwrap()).unwrap();
    let row_perm = rows.iter().map(|&i| pos(&rows, invol[i])).collect();
    let col_perm = cols.iter().map(|&j| pos(&cols, invol[j])).collect();
    RandomCase { d_b, row_perm, col_perm }
}

fn random_split(dnp: &LabeledIntMatrix, rng: &mut ChaCha8Rng) -> LabeledIntMatrix {
    let r = dnp.rows();
    let c = dnp.cols();
    let mut e = vec![vec![0i64; 2 * c]; 2 * r];
    for i in 0..r {
        for j in 0..c {
            let d = dnp.get(i, j).to_i64().unwrap();
            let a = rng.gen_range(0..=d);
            let b = d - a;
            e[2 * i][2 * j] = a;
            e[2 * i + 1][2 * j + 1] = a;
            e[2 * i][2 * j + 1] = b;
            e[2 * i + 1][2 * j] = b;
        }
    }
    let split = |ls: &[String]| ls.iter().flat_map(|l| [format!("{l}+"), format!("{l}-")]).collect::<Vec<_>>();
    LabeledIntMatrix::new(split(&dnp.row_labels), split(&dnp.col_labels), IntMatrix::from_i64(&e, 2 * c).unwrap())
        .unwrap()
}

fn c11() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut with_wedge = 0;
    for case in 0..100 {
        let rc = random_case(&mut rng);
        let pairing = eps_column_action(&rc.d_b, &rc.row_perm).map_err(|e| format!("case {case}: {e}"))?;
        ensure(pairing.cols == rc.col_perm, || format!("case {case}: column pairing differs"))?;
        let dnp = extract_dnp(&rc.d_b, &pairing);
        let dp = random_split(&dnp, &mut rng);
        let alt = transfer_to_alternating(&rc.d_b, &pairing, &dp).map_err(|e| format!("case {case}: {e}"))?;
        let report = relations_check(&rc.d_b, &alt, &pairing);
        ensure(report.ok(), || format!("case {case}: {:?}", report.violations))?;
        if let Some(cert) = wedge_shape(&dnp) {
            with_wedge += 1;
            let lifted = reorder_alt(&cert, &dp).map_err(|e| format!("case {case}: {e}"))?;
            ensure(validate_wedge(&dp, &lifted), || format!("case {case}: lifted certificate invalid"))?;
        }
    }
    ensure(with_wedge > 0, || "no case had a wedge-shaped D_np".into())
}

/// Strips p-rim-hooks in every possible way, using cell hook lengths only.
fn cores_by_exhaustion(lambda: &Partition, prime: usize, memo: &mut HashMap<Partition, BTreeSet<Partition>>) -> BTreeSet<Partition> {
    if let Some(s) = memo.get(lambda) {
        return s.clone();
    }
    let mut out = BTreeSet::new();
    for row in 1..=lambda.len() {
        for col in 1..=lambda.part(row) {
            if lambda.hook_length(row, col) == Some(prime) {
                let (smaller, _) = lambda.remove_rim_hook(row, col, prime).unwrap();
                out.extend(cores_by_exhaustion(&smaller, prime, memo));
            }
        }
    }
    if out.is_empty() {
        out.insert(lambda.clone());
    }
    memo.insert(lambda.clone(), out.clone());
    out
}

/// Every order of p-rim-hook removal, collecting the resulting signs.
fn signs_by_exhaustion(lambda: &Partition, prime: usize, memo: &mut HashMap<Partition, BTreeSet<i64>>) -> BTreeSet<i64> {
    if let Some(s) = memo.get(lambda) {
        return s.clone();
    }
    let mut out = BTreeSet::new();
    for row in 1..=lambda.len() {
        for col in 1..=lambda.part(row) {
            if lambda.hook_length(row, col) == Some(prime) {
                let (smaller, leg) = lambda.remove_rim_hook(row, col, prime).unwrap();
                let sign = if leg % 2 == 0 { 1 } else { -1 };
                out.extend(signs_by_exhaustion(&smaller, prime, memo).into_iter().map(|s| s * sign));
            }
        }
    }
    if out.is_empty() {
        out.insert(1);
    }
    memo.insert(lambda.clone(), out.clone());
    out
}

fn hook_formula(lambda: &Partition) -> BigInt {
    let n = lambda.size();
    let mut num: BigInt = (1..=n).map(BigInt::from).product();
    let mut den = BigInt::from(1);
    for row in 1..=lambda.len() {
        for col in 1..=lambda.part(row) {
            den *= lambda.hook_length(row, col).unwrap();
        }
    }
    num /= den;
    num
}

fn c12() -> Check {
    for n in 0..=10 {
        for prime in [2, 3, 5, 7] {
            let mut memo = HashMap::new();
            for lambda in Partition::all(n) {
                let cores = cores_by_exhaustion(&lambda, prime, &mut memo);
                ensure(cores.len() == 1 && cores.contains(&p_core(&lambda, prime)), || {
                    format!("{lambda} p={prime}: {cores:?}")
                })?;
            }
        }
    }
    for n in 1..=12 {
        let identity = Partition::column(n);
        for lambda in Partition::all(n) {
            let deg = mn_value(&lambda, &identity).map_err(|e| e.to_string())?;
            ensure(BigInt::from(deg) == hook_formula(&lambda), || format!("degree of {lambda}"))?;
        }
    }
    for n in 0..=8 {
        for prime in [2, 3, 5] {
            let mut memo = HashMap::new();
            for lambda in Partition::all(n) {
                let signs = signs_by_exhaustion(&lambda, prime, &mut memo);
                ensure(signs.len() == 1 && signs.contains(&p_sign(&lambda, prime)), || {
                    format!("{lambda} p={prime}: {signs:?}")
                })?;
            }
        }
    }
    Ok(())
}

fn main() {
    let ms = Duration::from_millis;
    let s = Duration::from_secs;
    let results = [
        run(1, "quotient fixture", ms(1), c1),
        run(2, "quotient of conjugate", s(10), c2),
        run(3, "bar regularity vs middle quotient", s(5), c3),
        run(4, "character table orthogonality", s(120), c4),
        run(5, "orthogonality blocks equal core blocks", s(60), c5),
        run(6, "wreath basic sets", s(120), c6),
        run(7, "block isometries and Osima step", s(180), c7),
        run(8, "symmetric basic sets, ε-stability, self-conjugate rule", s(180), c8),
        run(9, "alternating basic sets", s(180), c9),
        run(10, "fixture wedge refusal and traces", s(1), c10),
        run(11, "randomized transfer round trip", s(30), c11),
        run(12, "oracle equivalences", s(60), c12),
    ];
    let failed: Vec<usize> = (0..results.len()).filter(|&i| !results[i]).map(|i| i + 1).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}

