from twostep.catalog.entries import CatalogEntry, catalog_get, catalog_names, catalog_params
