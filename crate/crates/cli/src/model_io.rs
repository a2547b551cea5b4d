//! Model files: versioned JSON documents that round-trip exactly.

use std::path::Path;

use complexite_core::classify::TrainedModel;
use complexite_core::SCHEMA_VERSION;

use crate::{Error, Result};

pub fn save_model(path: &Path, model: &TrainedModel) -> Result<()> {
    let mut json = serde_json::to_string_pretty(model)
        .map_err(|e| Error::Other(format!("serializing model: {e}")))?;
    json.push('\n');
    std::fs::write(path, json).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_model(path: &Path) -> Result<TrainedModel> {
    let content = crate::read_to_string(path)?;
    let model: TrainedModel = serde_json::from_str(&content).map_err(|e| Error::Manifest {
        path: path.to_path_buf(),
        message: format!("not a valid model file: {e}"),
    })?;
    if model.schema_version != SCHEMA_VERSION {
        return Err(Error::Manifest {
            path: path.to_path_buf(),
            message: format!(
                "model schema version {} is not supported (expected {})",
                model.schema_version, SCHEMA_VERSION
            ),
        });
    }
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use complexite_core::classify::{Dataset, HyperParams};

    #[test]
    fn save_load_round_trip_preserves_predictions() {
        let mut data = Dataset::new(vec![String::from("KM_score"), String::from("x")], 2);
        data.push(String::from("a"), vec![95.0, 0.2], 0).unwrap();
        data.push(String::from("b"), vec![45.0, 0.8], 1).unwrap();
        let model = TrainedModel::fit(&data, &HyperParams::NaiveBayes { alpha: 0.5 }).unwrap();

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("model.json");
        save_model(&path, &model).unwrap();
        let loaded = load_model(&path).unwrap();
        assert_eq!(model, loaded);

        // Writing the loaded model again is byte-identical.
        let again = dir.path().join("model2.json");
        save_model(&again, &loaded).unwrap();
        assert_eq!(
            std::fs::read(&path).unwrap(),
            std::fs::read(&again).unwrap()
        );
    }

    #[test]
    fn wrong_version_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("model.json");
        let mut data = Dataset::new(vec![String::from("KM_score")], 8);
        data.push(String::from("a"), vec![95.0], 0).unwrap();
        let model = TrainedModel::fit(&data, &HyperParams::Baseline).unwrap();
        let mut json = serde_json::to_value(&model).unwrap();
        json["schema_version"] = serde_json::json!(999);
        std::fs::write(&path, serde_json::to_string(&json).unwrap()).unwrap();
        assert!(load_model(&path).is_err());
    }
}
