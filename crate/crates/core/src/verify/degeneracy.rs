use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LabeledLevel {
    pub stack: String,
    pub label: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegeneracyCluster {
    pub value: f64,
    pub members: Vec<LabeledLevel>,
}

impl DegeneracyCluster {
    pub fn stacks(&self) -> Vec<&str> {
        let mut s: Vec<&str> = self.members.iter().map(|m| m.stack.as_str()).collect();
        s.sort_unstable();
        s.dedup();
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegeneracyReport {
    pub tol: f64,
    pub clusters: Vec<DegeneracyCluster>,
    /// Clusters spanning more than one stack.
    pub cross_stack: usize,
    /// Levels whose cluster contains only their own stack.
    pub unpaired: Vec<LabeledLevel>,
}

/// Groups levels from all stacks into clusters of values within `tol` of
/// their neighbour.
pub fn degeneracy_report(spectra: &[(String, Vec<(String, f64)>)], tol: f64) -> DegeneracyReport {
    let mut levels: Vec<LabeledLevel> = spectra
        .iter()
        .flat_map(|(stack, ls)| ls.iter().map(move |(label, value)| LabeledLevel { stack: stack.clone(), label: label.clone(), value: *value }))
        .collect();
    levels.sort_by(|a, b| a.value.total_cmp(&b.value));
    let mut clusters: Vec<DegeneracyCluster> = Vec::new();
    for lv in levels {
        match clusters.last_mut() {
            Some(c) if (lv.value - c.members.last().unwrap().value).abs() <= tol => c.members.push(lv),
            _ => clusters.push(DegeneracyCluster { value: lv.value, members: vec![lv] }),
        }
    }
    let mut cross_stack = 0;
    let mut unpaired = Vec::new();
    for c in &clusters {
        if c.stacks().len() > 1 {
            cross_stack += 1;
        } else {
            unpaired.extend(c.members.iter().cloned());
        }
    }
    DegeneracyReport { tol, clusters, cross_stack, unpaired }
}
