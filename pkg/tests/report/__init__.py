# Test per il report PDF
