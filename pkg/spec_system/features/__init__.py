# -*- coding: utf-8 -*-
from .feature_structure import FeatureStructure, FeatureValue, unify, get, put, subsumes, parse_features, render_value, sorted_atoms

__all__ = ['FeatureStructure', 'FeatureValue', 'unify', 'get', 'put', 'subsumes', 'parse_features', 'render_value', 'sorted_atoms']
